"""Closed-form specializations of the forgotten basis and the formal
coefficient series built from them.

The key evaluations are f_mu at the one-letter alphabets 1 and 1-t, the
series factor h_mu[1/(1-t)] * f_mu[1-t], the evaluation of a monomial
symmetric function at the t-staircase alphabet of a partition, and the
formal power series whose polynomial part is the forgotten-basis inner
product of the Delta image.
"""

from __future__ import annotations

from .partitions import Partition, partitions_of, padded_rearrangements, rearrangement_count
from .tarith import TPoly, TSeries, ONE, partitions_bounded_series


def _as_partition(mu):
    return mu if isinstance(mu, Partition) else Partition(mu)


def _sign(m, mu):
    return -1 if (m - len(mu)) % 2 else 1


def forgotten_at_one(mu, m):
    """f_mu evaluated at the alphabet 1: a signed rearrangement count."""
    mu = _as_partition(mu)
    if mu.size != m:
        raise ValueError("expected a partition of %d, got %r" % (m, mu))
    return _sign(m, mu) * rearrangement_count(mu)


def forgotten_at_one_minus_t(mu, m):
    """f_mu evaluated at the alphabet 1 - t, as an integer polynomial.

    The removal sum runs over distinct part values of mu: the underlying
    decomposition splits off a single part, so each value contributes once.
    """
    mu = _as_partition(mu)
    if mu.size != m:
        raise ValueError("expected a partition of %d, got %r" % (m, mu))
    acc = TPoly.const(rearrangement_count(mu))
    for value in sorted(set(mu.parts)):
        acc = acc - TPoly.t_power(value) * rearrangement_count(mu.remove(value))
    return _sign(m, mu) * acc


def hf_term_series(mu, m, order):
    """The series h_mu[1/(1-t)] * f_mu[1-t], truncated at ``order``.

    Computed two ways and cross-checked: as the product of bounded-partition
    series with the closed form of f_mu[1-t], and as the single-removal sum
    G_{i-1} * prod G_{mu_j, j != one copy of i} * |R(mu-(i))|.  The sign
    (-1)^(m - len(mu)) is included.
    """
    mu = _as_partition(mu)
    if mu.size != m:
        raise ValueError("expected a partition of %d, got %r" % (m, mu))

    product = TSeries.one(order)
    for part in mu:
        product = product * partitions_bounded_series(part, order)
    direct = product * forgotten_at_one_minus_t(mu, m)

    removal = TSeries.zero(order)
    for value in sorted(set(mu.parts)):
        reduced = mu.remove(value)
        term = partitions_bounded_series(value - 1, order)
        for part in reduced:
            term = term * partitions_bounded_series(part, order)
        removal = removal + term * rearrangement_count(reduced)
    removal = removal * _sign(m, mu)

    if direct != removal:
        raise AssertionError(
            "product and removal forms disagree for mu=%r at order %d" % (mu, order)
        )
    return direct


def monomial_eval(lam, mu):
    """m_lam evaluated at the alphabet of t-powers t^0..t^(mu_i - 1), one
    block per part of mu.  Zero when lam has more parts than mu has cells."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    cells = mu.size
    if len(lam) > cells:
        return TPoly()
    exponents = [j for part in mu for j in range(part)]
    acc = TPoly()
    for arrangement in padded_rearrangements(lam, cells):
        power = sum(j * entry for j, entry in zip(exponents, arrangement))
        acc = acc + TPoly.t_power(power)
    return acc


def forgotten_coefficient_series(lam, k, order):
    """The truncated series for the forgotten-basis coefficient of the
    Delta image: sum over mu of k+1 of the hf factor times the monomial
    evaluation.  A polynomial of degree at most n(n-1)/2 hides inside, so
    any order at least that determines it."""
    lam = _as_partition(lam)
    n = lam.size
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= %d, got k=%d" % (n, k))
    if len(lam) > k + 1:
        return TSeries.zero(order)
    acc = TSeries.zero(order)
    for mu in partitions_of(k + 1):
        weight = monomial_eval(lam, mu)
        if weight.is_zero():
            continue
        acc = acc + hf_term_series(mu, k + 1, order) * weight
    return acc
