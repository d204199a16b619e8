"""Independent computation of the Delta operator image at q=1.

The modified Macdonald basis element indexed by mu specializes at q=1 to a
product of pochhammer factors and geometric plethysms of complete
homogeneous pieces; the Delta operator acts on each such piece by the
plethystic evaluation of its defining symmetric function at the
t-staircase alphabet of mu.  Expanding e_n over those pieces makes the
whole image computable in exact rational arithmetic, entirely at q=1.
"""

from __future__ import annotations

from .partitions import Partition, partitions_of
from .specialize import forgotten_at_one_minus_t
from .symfunc import (
    SymFuncExpr,
    degree_bound,
    hall_inner,
    plethysm_geometric,
)
from .tarith import ONE, TPoly, TRat, RAT_ZERO, t_pochhammer


def _staircase_monomials(mu):
    """The alphabet of mu as a list of t-powers: 0..mu_i-1 per part."""
    return [j for part in mu for j in range(part)]


def elementary_eigenvalue(mu, k):
    """e_k evaluated at the t-staircase alphabet of mu, exactly in TPoly."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if k < 0:
        raise ValueError("k must be nonnegative")
    coeffs = [ONE] + [TPoly()] * k
    for power in _staircase_monomials(mu):
        mono = TPoly.t_power(power)
        for j in range(k, 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * mono
    return coeffs[k]


def eval_at_staircase(expr, mu):
    """Plethystic evaluation of a symmetric function at the t-staircase
    alphabet of mu; each p_r substitutes t -> t^r into the alphabet sum.
    Coefficients of the expression are treated as scalars."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    powers = _staircase_monomials(mu)
    pexpr = expr.convert("p")
    total = RAT_ZERO
    for lam, c in pexpr.terms():
        factor = TRat(ONE)
        for r in lam:
            factor = factor * TPoly(
                _power_sum_coeffs(powers, r)
            )
        total = total + c * factor
    return total


def _power_sum_coeffs(powers, r):
    top = max(powers, default=0) * r
    out = [0] * (top + 1)
    for j in powers:
        out[j * r] += 1
    return out


def macdonald_q1(mu):
    """The modified Macdonald element at q=1, in the power sum basis."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    conj = mu.conjugate()
    scalar = ONE
    for part in conj:
        scalar = scalar * t_pochhammer(part)
    expr = plethysm_geometric(SymFuncExpr.basis_element("h", conj))
    return expr.scaled(scalar)


def geometric_h_expansion(n):
    """The coefficient map mu -> f_mu[1-t] expanding e_n over the geometric
    plethysms of h_mu, verified by exact reconstruction of e_n."""
    coeffs = {
        mu: forgotten_at_one_minus_t(mu, n) for mu in partitions_of(n)
    }
    rebuilt = None
    for mu, c in coeffs.items():
        term = plethysm_geometric(SymFuncExpr.basis_element("h", mu)).scaled(c)
        rebuilt = term if rebuilt is None else rebuilt + term
    expected = SymFuncExpr.basis_element("e", Partition([n])).convert("p")
    if rebuilt != expected:
        raise AssertionError("reconstruction of e_%d failed" % n)
    return coeffs


def delta_e(n, k):
    """The image of e_n under the Delta operator for e_k, at q=1, expanded
    in the elementary basis with integer polynomial coefficients."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if n > degree_bound():
        raise ValueError("degree %d exceeds bound %d" % (n, degree_bound()))
    total = None
    for mu in partitions_of(n):
        factor = elementary_eigenvalue(mu, k) * forgotten_at_one_minus_t(mu, n)
        term = plethysm_geometric(SymFuncExpr.basis_element("h", mu)).scaled(factor)
        total = term if total is None else total + term
    result = total.convert("e")
    for lam, c in result.terms():
        if not c.is_polynomial():
            raise AssertionError(
                "coefficient of e_%r is not a polynomial: %r" % (lam, c)
            )
    return result


def delta_general(fexpr, n):
    """The image of e_n under the Delta operator for an arbitrary symmetric
    function, at q=1, in the power sum basis."""
    total = None
    for mu in partitions_of(n):
        factor = eval_at_staircase(fexpr, mu) * forgotten_at_one_minus_t(mu, n)
        term = plethysm_geometric(SymFuncExpr.basis_element("h", mu)).scaled(factor)
        total = term if total is None else total + term
    return total


def haglund_check(n, k, fexpr):
    """Whether the inner product of the Delta image with fexpr matches the
    dual evaluation: Delta for omega(fexpr) applied to e_{k+1}, paired with
    the single-row Schur function."""
    if fexpr.degree != n:
        raise ValueError("expected an expression of degree %d" % n)
    lhs = hall_inner(delta_e(n, k), fexpr)
    rhs_expr = delta_general(fexpr.omega(), k + 1)
    rhs = hall_inner(rhs_expr, SymFuncExpr.basis_element("s", Partition([k + 1])))
    return lhs == rhs
