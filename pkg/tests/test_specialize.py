import pytest

from deltaq1.partitions import Partition, partitions_of
from deltaq1.specialize import (
    forgotten_at_one,
    forgotten_at_one_minus_t,
    forgotten_coefficient_series,
    hf_term_series,
    monomial_eval,
)
from deltaq1.symfunc import SymFuncExpr, hall_inner
from deltaq1.tarith import ONE, TPoly, TRat, TSeries


def _times_one_minus_t_alphabet(expr):
    """Engine-side substitution X -> X(1-t): p_r picks up 1 - t^r."""
    out = {}
    pexpr = expr.convert("p")
    for lam, c in pexpr.terms():
        factor = TRat(1)
        for r in lam:
            factor = factor * (ONE - TPoly.t_power(r))
        out[lam] = c * factor
    return SymFuncExpr(expr.degree, "p", out)


@pytest.mark.parametrize(
    "mu, m, value", [([1, 1, 1], 3, 1), ([2], 2, -1), ([2, 1], 3, -2)]
)
def test_forgotten_at_one_examples(mu, m, value):
    assert forgotten_at_one(mu, m) == value


def test_forgotten_at_one_vs_jacobi_trudi():
    # f_mu[1] is the h_mu coefficient of e_m expanded in the h basis
    for m in range(1, 7):
        hexp = SymFuncExpr.basis_element("e", [m]).convert("h")
        for mu in partitions_of(m):
            assert TRat(forgotten_at_one(mu, m)) == hexp.coeff(mu)


@pytest.mark.parametrize(
    "mu, coeffs",
    [([1, 1], [1, -1]), ([2], [-1, 0, 1]), ([2, 1], [-2, 1, 1])],
)
def test_forgotten_at_one_minus_t_examples(mu, coeffs):
    assert forgotten_at_one_minus_t(mu, sum(mu)) == TPoly(coeffs)


def test_forgotten_at_t_zero_matches_at_one():
    for m in range(1, 9):
        for mu in partitions_of(m):
            assert forgotten_at_one_minus_t(mu, m)(0) == forgotten_at_one(mu, m)


def test_forgotten_addition_formula_against_engine():
    # f_mu[1-t] is the h_mu coefficient of e_m[X(1-t)]
    for m in range(1, 7):
        em = _times_one_minus_t_alphabet(SymFuncExpr.basis_element("e", [m]))
        hexp = em.convert("h")
        for mu in partitions_of(m):
            assert hexp.coeff(mu) == TRat(forgotten_at_one_minus_t(mu, m))


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        forgotten_at_one([2], 3)
    with pytest.raises(ValueError):
        forgotten_at_one_minus_t([2], 3)
    with pytest.raises(ValueError):
        hf_term_series(Partition([2]), 3, 5)


def test_hf_term_series_examples():
    assert hf_term_series(Partition([1]), 1, 5) == TSeries.from_poly(ONE, 5)
    assert hf_term_series(Partition([1, 1]), 2, 3) == TSeries.from_poly(
        TPoly([1, 1, 1, 1]), 3
    )
    # G_2 * f_(2)[1-t] collapses to -1/(1-t)
    assert hf_term_series(Partition([2]), 2, 3) == TSeries.from_poly(
        TPoly([-1, -1, -1, -1]), 3
    )


def test_hf_term_series_double_route():
    # the constructor itself asserts product form == removal-sum form
    for m in range(1, 8):
        for mu in partitions_of(m):
            hf_term_series(mu, m, 30)


@pytest.mark.parametrize(
    "lam, mu, coeffs",
    [([2], [2], [1, 0, 1]), ([1, 1], [2], [0, 1]), ([1, 1, 1], [2], [])],
)
def test_monomial_eval_examples(lam, mu, coeffs):
    assert monomial_eval(lam, mu) == TPoly(coeffs)


def test_monomial_eval_against_power_sum_route():
    # independent evaluation through the p basis: p_r at the staircase
    # alphabet substitutes t -> t^r into the alphabet sum
    for n in range(1, 6):
        for mu in partitions_of(n):
            powers = [j for part in mu for j in range(part)]
            for lam in partitions_of(n):
                pexp = SymFuncExpr.basis_element("m", lam).convert("p")
                total = TRat(0)
                for nu, c in pexp.terms():
                    factor = TRat(1)
                    for r in nu:
                        coeffs = [0] * (max(powers) * r + 1)
                        for j in powers:
                            coeffs[j * r] += 1
                        factor = factor * TPoly(coeffs)
                    total = total + c * factor
                assert total == TRat(monomial_eval(lam, mu)), (lam, mu)


def test_forgotten_coefficient_series_examples():
    assert forgotten_coefficient_series([2], 1, 4) == TSeries.from_poly(
        TPoly([1, 1]), 4
    )
    assert forgotten_coefficient_series([1, 1], 1, 4) == TSeries.from_poly(ONE, 4)
    assert forgotten_coefficient_series([1], 1, 4) == TSeries.from_poly(ONE, 4)


def test_forgotten_coefficient_series_vanishes_when_long():
    assert forgotten_coefficient_series([1, 1, 1], 1, 6).is_zero()


def test_forgotten_coefficient_polynomiality():
    for n in range(2, 6):
        bound = n * (n - 1) // 2
        for k in range(1, n + 1):
            for lam in partitions_of(n):
                series = forgotten_coefficient_series(lam, k, bound + 5)
                for d in range(bound + 1, bound + 6):
                    assert series.coeff(d) == 0


def test_forgotten_coefficient_range_checks():
    with pytest.raises(ValueError):
        forgotten_coefficient_series([2, 1], 0, 4)
    with pytest.raises(ValueError):
        forgotten_coefficient_series([2, 1], 4, 4)
