import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltaq1.tarith import (
    ONE,
    TLaurent,
    TPoly,
    TRat,
    TSeries,
    divexact,
    partitions_bounded_rat,
    partitions_bounded_series,
    poly_gcd,
    t_analog,
    t_pochhammer,
)

small_polys = st.lists(st.integers(-9, 9), max_size=6).map(TPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


def test_poly_basics():
    p = TPoly([1, 2, 0, 0])
    assert p.degree == 1 and p.coeffs == (1, 2)
    assert TPoly().degree == -1
    assert (TPoly([1, 1]) * TPoly([1, -1])) == TPoly([1, 0, -1])
    assert TPoly([0, 1]) ** 3 == TPoly.t_power(3)
    assert TPoly([1, 2])(3) == 7
    with pytest.raises(TypeError):
        TPoly([1.5])


def test_poly_json():
    p = TPoly([10**30, -2, 3])
    assert TPoly.from_json(p.to_json()) == p
    assert p.to_json()[0] == str(10**30)


@pytest.mark.parametrize("m, coeffs", [(0, []), (1, [1]), (3, [1, 1, 1])])
def test_t_analog(m, coeffs):
    assert t_analog(m) == TPoly(coeffs)


@pytest.mark.parametrize(
    "k, coeffs", [(0, [1]), (1, [1, -1]), (2, [1, -1, -1, 1])]
)
def test_t_pochhammer(k, coeffs):
    assert t_pochhammer(k) == TPoly(coeffs)


def test_bounded_partition_series_examples():
    assert partitions_bounded_series(0, 4).coeffs == (1, 0, 0, 0, 0)
    assert partitions_bounded_series(1, 3).coeffs == (1, 1, 1, 1)
    assert partitions_bounded_series(2, 4).coeffs == (1, 1, 2, 2, 3)


def test_bounded_rat_agrees_with_series():
    for r in range(9):
        assert partitions_bounded_rat(r).series(40) == partitions_bounded_series(r, 40)


def test_bounded_rat_recursion():
    # removing the largest-part-equal-to-r partitions leaves the r-1 family
    for r in range(1, 9):
        gr = partitions_bounded_rat(r)
        assert gr * TPoly.t_power(r) + partitions_bounded_rat(r - 1) == gr


def test_series_truncation_rules():
    a = TSeries.from_poly(TPoly([1, 1, 1]), 5)
    b = TSeries.from_poly(TPoly([1, -1]), 3)
    assert (a + b).order == 3
    assert (a * b).order == 3
    assert (a * b) == TSeries.from_poly(TPoly([1, 0, 0, -1]), 3)
    with pytest.raises(ValueError):
        b.truncate(5)


def test_series_inverse():
    geo = TSeries.from_poly(TPoly([1, -1]), 6).inverse()
    assert geo.coeffs == (1,) * 7
    assert TSeries.from_poly(TPoly([1, -1]), 3) * geo == TSeries.one(3)
    with pytest.raises(ValueError):
        TSeries.from_poly(TPoly([2]), 3).inverse()


def test_rat_canonical_form():
    r = TRat(TPoly([1, 0, -1]), TPoly([1, -1]))
    assert r == TRat(TPoly([1, 1]))
    assert r.is_polynomial() and r.as_poly() == TPoly([1, 1])
    r = TRat(TPoly([2, 2]), TPoly([4]))
    assert r.num == TPoly([1, 1]) and r.den == TPoly([2])
    r = TRat(TPoly([1]), TPoly([-1, 1]))
    assert r.den.leading() > 0
    with pytest.raises(ZeroDivisionError):
        TRat(ONE, TPoly())


def test_rat_series_example():
    one = TRat(ONE, TPoly([1, -1])) * TPoly([1, -1])
    assert one == TRat(1)
    assert TRat(ONE, TPoly([1, -1])).series(3) == TSeries.from_poly(TPoly([1, 1, 1, 1]), 3)


def test_rat_json():
    r = TRat(TPoly([0, 1]), TPoly([1, 0, -1]))
    assert TRat.from_json(r.to_json()) == r


def test_laurent_basics():
    h = TLaurent(TPoly([1, 1]), -1)
    assert h.min_power() == -1 and h.coeff(-1) == 1 and h.coeff(0) == 1
    assert h.times_t(1) == TLaurent(TPoly([1, 1]))
    assert h.times_t(1).to_tpoly() == TPoly([1, 1])
    with pytest.raises(ValueError):
        h.to_tpoly()
    assert TLaurent(TPoly([0, 0, 3]), -1) == TLaurent(TPoly([3]), 1)
    assert TLaurent.from_json(h.to_json()) == h


def test_laurent_arithmetic():
    a = TLaurent(TPoly([1]), -2)
    b = TLaurent(TPoly([1]), 2)
    assert a * b == TLaurent(ONE)
    assert a + b == TLaurent(TPoly([1, 0, 0, 0, 1]), -2)
    assert (a - a).is_zero()


@given(small_polys, small_polys)
def test_poly_ring_commutes(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60)
def test_poly_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_rat_inverse_pairs(a, b):
    r = TRat(a, b)
    assert r * TRat(b, a) == TRat(1)


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert divexact(a, g) * g == a
    assert divexact(b, g) * g == b
