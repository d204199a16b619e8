"""Identity suites over parameter ranges, with machine-readable reports.

Each suite walks a deterministic case list and stops at the first
counterexample, serializing both sides.  Evaluation may be spread over a
thread pool; results are collected in case order so a report's content
never depends on scheduling.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor

from .bijection import decorated_to_msequence, msequence_to_decorated
from .diagrams import diagrams_of_weight, fixed_to_msequence, involution
from .dyck import enumerate_decorated, enumerate_paths, decoration_weight
from .msequences import (
    msequence_polynomial,
    msequences,
    osp_polynomial,
    ssyt_polynomial,
)
from .oracle import delta_e, haglund_check
from .partitions import Partition, partitions_of
from .symfunc import SymFuncExpr, hall_inner
from .tarith import TLaurent, TPoly, TRat

SUITES = ("eq1", "eq2", "bijection", "involution", "hilbert", "schur", "haglund")


def _map_cases(fn, cases, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, cases))
    return [fn(c) for c in cases]


def _report(name, parameters, cases, failures, started):
    report = {
        "identity": name,
        "parameters": parameters,
        "cases": cases,
        "status": "fail" if failures else "pass",
    }
    if failures:
        report["counterexample"] = failures[0]
    report["duration_seconds"] = round(time.monotonic() - started, 3)
    return report


def check_eq1(n_max=6, threads=1):
    """Elementary-basis expansion from M-sequences against the eigenoperator
    route, coefficient by coefficient."""
    started = time.monotonic()
    cases = [(n, k) for n in range(1, n_max + 1) for k in range(1, n + 1)]

    def run(case):
        n, k = case
        expr = delta_e(n, k)
        for lam in partitions_of(n):
            combinatorial = TRat(msequence_polynomial(lam, k))
            if expr.coeff(lam) != combinatorial:
                return {
                    "n": n,
                    "k": k,
                    "partition": lam.to_json(),
                    "msequence_side": combinatorial.to_json(),
                    "oracle_side": expr.coeff(lam).to_json(),
                }
        return None

    failures = [f for f in _map_cases(run, cases, threads) if f]
    return _report("eq1", {"n_max": n_max}, len(cases), failures, started)


def check_eq2(n_max=7, threads=1):
    """M-sequence polynomials against area-weighted decoration sums over
    Dyck paths grouped by vertical run partition."""
    started = time.monotonic()
    cases = [(n, k) for n in range(1, n_max + 1) for k in range(1, n + 1)]
    paths_by_n = {n: enumerate_paths(n) for n in range(1, n_max + 1)}

    def run(case):
        n, k = case
        sums = {}
        for path in paths_by_n[n]:
            lam = path.vertical_run_partition()
            term = decoration_weight(path, n - k).times_t(path.area())
            sums[lam] = sums.get(lam, TLaurent(0)) + term
        for lam in partitions_of(n):
            lhs = TLaurent(msequence_polynomial(lam, k))
            rhs = sums.get(lam, TLaurent(0))
            if lhs != rhs:
                return {
                    "n": n,
                    "k": k,
                    "partition": lam.to_json(),
                    "msequence_side": lhs.to_json(),
                    "path_side": rhs.to_json(),
                }
        return None

    failures = [f for f in _map_cases(run, cases, threads) if f]
    return _report("eq2", {"n_max": n_max}, len(cases), failures, started)


def check_bijection(n_max=7, threads=1):
    """Round trips in both directions, with weight transport and matching
    object counts for every (n, k, run partition)."""
    started = time.monotonic()
    cases = [(n, k) for n in range(1, n_max + 1) for k in range(1, n + 1)]

    def run(case):
        n, k = case
        seen = {}
        for decorated in enumerate_decorated(n, k):
            seq = decorated_to_msequence(decorated)
            if seq.rho() != decorated.decorated_area():
                return {"n": n, "k": k, "object": decorated.to_json(),
                        "reason": "weight not preserved"}
            back = msequence_to_decorated(seq)
            if back != decorated:
                return {"n": n, "k": k, "object": decorated.to_json(),
                        "reason": "round trip failed"}
            lam = decorated.path.vertical_run_partition()
            seen.setdefault(lam, set()).add(seq)
        for lam in partitions_of(n):
            expected = msequences(lam, k)
            got = seen.get(lam, set())
            if len(expected) != len(got) or set(expected) != got:
                return {"n": n, "k": k, "partition": lam.to_json(),
                        "reason": "image does not exhaust the M-sequences"}
            for seq in expected:
                if msequence_to_decorated(seq).decorated_area() != seq.rho():
                    return {"n": n, "k": k, "object": seq.to_json(),
                            "reason": "inverse weight not preserved"}
        return None

    failures = [f for f in _map_cases(run, cases, threads) if f]
    return _report("bijection", {"n_max": n_max}, len(cases), failures, started)


def check_involution(n_max=5, k_max=3, degree_max=8, threads=1, audit_degree=None):
    """Involution laws on every degree slice: pairs have equal weight and
    opposite sign and map back; fixed points are exactly the M-sequences;
    signed counts match the M-polynomial coefficients."""
    started = time.monotonic()
    if audit_degree is not None:
        threads = 1  # keep the audit trail in case order
    cases = [
        (n, k, lam, d)
        for n in range(1, n_max + 1)
        for k in range(1, k_max + 1)
        for lam in partitions_of(n)
        for d in range(degree_max + 1)
    ]
    audit = []

    def run(case):
        n, k, lam, d = case
        diagrams = diagrams_of_weight(k, lam, d)
        signed = 0
        fixed_seqs = []
        for diagram in diagrams:
            signed += diagram.sign()
            partner = involution(diagram)
            if partner is None:
                if any(st.row_len != 1 for st in diagram.stacks):
                    return {"case": [n, k, lam.to_json(), d],
                            "reason": "wide fixed point",
                            "object": diagram.to_json()}
                fixed_seqs.append(fixed_to_msequence(diagram))
                continue
            if partner.weight() != diagram.weight():
                return {"case": [n, k, lam.to_json(), d],
                        "reason": "weight changed",
                        "object": diagram.to_json()}
            if partner.sign() != -diagram.sign():
                return {"case": [n, k, lam.to_json(), d],
                        "reason": "sign not reversed",
                        "object": diagram.to_json()}
            if involution(partner) != diagram:
                return {"case": [n, k, lam.to_json(), d],
                        "reason": "not an involution",
                        "object": diagram.to_json()}
            if audit_degree is not None and d == audit_degree:
                audit.append({"diagram": diagram.to_json(),
                              "partner": partner.to_json()})
        expected = [s for s in msequences(lam, k) if s.rho() == d]
        if sorted(s.pairs for s in fixed_seqs) != sorted(s.pairs for s in expected):
            return {"case": [n, k, lam.to_json(), d],
                    "reason": "fixed points differ from M-sequences"}
        coeff = msequence_polynomial(lam, k).coeff(d)
        if signed != coeff:
            return {"case": [n, k, lam.to_json(), d],
                    "reason": "signed count %d != coefficient %d" % (signed, coeff)}
        return None

    failures = [f for f in _map_cases(run, cases, threads) if f]
    report = _report(
        "involution",
        {"n_max": n_max, "k_max": k_max, "degree_max": degree_max},
        len(cases),
        failures,
        started,
    )
    if audit_degree is not None:
        report["audit"] = {"degree": audit_degree, "pairings": audit}
    return report


def check_hilbert(n_max=5, threads=1):
    """Ordered-set-partition polynomials against the oracle inner product
    with the n-th power of the first power sum."""
    started = time.monotonic()
    cases = [(n, k) for n in range(1, n_max + 1) for k in range(1, n + 1)]

    def run(case):
        n, k = case
        combinatorial = TRat(osp_polynomial(n, k))
        p1n = SymFuncExpr.basis_element("p", Partition([1] * n))
        via_oracle = hall_inner(delta_e(n, k), p1n)
        if combinatorial != via_oracle:
            return {"n": n, "k": k,
                    "osp_side": combinatorial.to_json(),
                    "oracle_side": via_oracle.to_json()}
        return None

    failures = [f for f in _map_cases(run, cases, threads) if f]
    return _report("hilbert", {"n_max": n_max}, len(cases), failures, started)


def check_schur(n_max=5, threads=1):
    """Tableau-sequence polynomials against the oracle Schur coefficients,
    including nonnegativity of every coefficient."""
    started = time.monotonic()
    cases = [(n, k) for n in range(1, n_max + 1) for k in range(1, n + 1)]

    def run(case):
        n, k = case
        image = delta_e(n, k).omega()
        for lam in partitions_of(n):
            combinatorial = ssyt_polynomial(lam, k)
            via_oracle = hall_inner(
                image, SymFuncExpr.basis_element("s", lam)
            )
            if TRat(combinatorial) != via_oracle:
                return {"n": n, "k": k, "partition": lam.to_json(),
                        "ssyt_side": combinatorial.to_json(),
                        "oracle_side": via_oracle.to_json()}
            if any(c < 0 for c in combinatorial.coeffs):
                return {"n": n, "k": k, "partition": lam.to_json(),
                        "reason": "negative coefficient"}
        return None

    failures = [f for f in _map_cases(run, cases, threads) if f]
    return _report("schur", {"n_max": n_max}, len(cases), failures, started)


def check_haglund(n_max=5, threads=1):
    """The duality between pairing with a forgotten element and applying the
    Delta operator for its omega image, across all degrees and k."""
    started = time.monotonic()
    cases = [
        (n, k, lam)
        for n in range(1, n_max + 1)
        for k in range(1, n + 1)
        for lam in partitions_of(n)
    ]

    def run(case):
        n, k, lam = case
        fexpr = SymFuncExpr.basis_element("f", lam)
        if not haglund_check(n, k, fexpr):
            return {"n": n, "k": k, "partition": lam.to_json(),
                    "reason": "identity fails"}
        return None

    failures = [f for f in _map_cases(run, cases, threads) if f]
    return _report("haglund", {"n_max": n_max}, len(cases), failures, started)


_RUNNERS = {
    "eq1": check_eq1,
    "eq2": check_eq2,
    "bijection": check_bijection,
    "involution": check_involution,
    "hilbert": check_hilbert,
    "schur": check_schur,
    "haglund": check_haglund,
}


def run_suite(name, **options):
    if name not in _RUNNERS:
        raise ValueError("unknown suite %r" % (name,))
    return _RUNNERS[name](**options)
