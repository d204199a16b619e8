"""Command line surface: expansions, identity suites, and the bijection.

All structured output is JSON on stdout; errors go to stderr.  Exit codes:
0 success, 1 counterexample or invalid object, 2 usage.  Reports omit the
wall-clock field unless asked, so default output is byte-identical across
runs with the same parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bijection import decorated_to_msequence, msequence_to_decorated
from .dyck import DecoratedDyckPath
from .msequences import (
    MSequence,
    generic_polynomial,
    monomials_of_e,
    monomials_of_h,
    msequence_polynomial,
    osp_polynomial,
    ssyt_polynomial,
)
from .oracle import delta_e
from .partitions import Partition, partitions_of
from .symfunc import degree_bound
from .tarith import TRat
from .verify import SUITES, run_suite


def _expansion_terms(n, k, basis):
    """Coefficient of each basis element of the Delta image, computed from
    the combinatorial models (no oracle)."""
    terms = []
    for lam in partitions_of(n):
        if basis == "e":
            coeff = TRat(msequence_polynomial(lam, k))
        elif basis == "s":
            coeff = TRat(ssyt_polynomial(lam.conjugate(), k))
        elif basis == "f":
            coeff = generic_polynomial(monomials_of_h(lam, k + 1), k)
        elif basis == "m":
            coeff = generic_polynomial(monomials_of_e(lam, k + 1), k)
        else:
            raise ValueError("unknown basis %r" % (basis,))
        if not coeff.is_zero():
            terms.append((lam, coeff.as_poly()))
    return terms


def _cmd_expand(args):
    n, k = args.n, args.k
    terms = _expansion_terms(n, k, args.basis)
    payload = {
        "n": n,
        "k": k,
        "basis": args.basis,
        "terms": [
            {"partition": lam.to_json(), "coeff": poly.to_json()}
            for lam, poly in terms
        ],
    }
    exit_code = 0
    if args.oracle:
        oracle_expr = delta_e(n, k).convert(args.basis)
        mismatches = []
        for lam in partitions_of(n):
            combinatorial = dict(terms).get(lam)
            combinatorial = TRat(combinatorial) if combinatorial else TRat(0)
            if oracle_expr.coeff(lam) != combinatorial:
                mismatches.append(
                    {
                        "partition": lam.to_json(),
                        "combinatorial": combinatorial.to_json(),
                        "oracle": oracle_expr.coeff(lam).to_json(),
                    }
                )
        payload["oracle_match"] = not mismatches
        if mismatches:
            payload["mismatches"] = mismatches
            exit_code = 1
    if args.format == "csv":
        width = 1 + max((p.degree for _, p in terms), default=0)
        lines = ["partition," + ",".join("t^%d" % i for i in range(width))]
        for lam, poly in terms:
            cells = [str(poly.coeff(i)) for i in range(width)]
            lines.append('"%s",' % list(lam.parts) + ",".join(cells))
        print("\n".join(lines))
    else:
        print(json.dumps(payload, indent=2))
    return exit_code


def _cmd_verify(args):
    options = {"threads": args.threads}
    if args.suite == "involution":
        options.update(
            n_max=args.n_max if args.n_max is not None else 5,
            k_max=args.k_max if args.k_max is not None else 3,
            degree_max=args.degree_max if args.degree_max is not None else 8,
        )
        if args.audit is not None:
            options["audit_degree"] = args.audit
    else:
        defaults = {"eq1": 6, "eq2": 7, "bijection": 7,
                    "hilbert": 5, "schur": 5, "haglund": 5}
        options["n_max"] = (
            args.n_max if args.n_max is not None else defaults[args.suite]
        )
    report = run_suite(args.suite, **options)
    if not args.timing:
        report.pop("duration_seconds", None)
    print(json.dumps(report, indent=2))
    return 0 if report["status"] == "pass" else 1


def _read_object(raw):
    if raw == "-":
        raw = sys.stdin.read()
    return json.loads(raw)


def _cmd_phi(args):
    try:
        decorated = DecoratedDyckPath.from_json(_read_object(args.object))
        seq = decorated_to_msequence(decorated)
    except (ValueError, KeyError, json.JSONDecodeError) as err:
        print("invalid decorated path: %s" % err, file=sys.stderr)
        return 1
    print(json.dumps(seq.to_json()))
    return 0


def _cmd_phi_inverse(args):
    try:
        seq = MSequence.from_json(_read_object(args.object))
        decorated = msequence_to_decorated(seq)
    except (ValueError, KeyError, json.JSONDecodeError) as err:
        print("invalid sequence: %s" % err, file=sys.stderr)
        return 1
    print(json.dumps(decorated.to_json()))
    return 0


def _cmd_hilbert(args):
    ks = [args.k] if args.k is not None else list(range(1, args.n + 1))
    rows = [
        {"k": k, "polynomial": osp_polynomial(args.n, k).to_json()} for k in ks
    ]
    print(json.dumps({"n": args.n, "rows": rows}, indent=2))
    return 0


def _cmd_schur(args):
    terms = []
    for lam in partitions_of(args.n):
        poly = ssyt_polynomial(lam.conjugate(), args.k)
        if not poly.is_zero():
            terms.append({"partition": lam.to_json(), "coeff": poly.to_json()})
    print(json.dumps({"n": args.n, "k": args.k, "terms": terms}, indent=2))
    return 0


def _positive(value):
    out = int(value)
    if out < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="deltaq1",
        description="Exact expansions and identity checks for the Delta "
        "operator image of e_n at q=1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", help="expand the image in a basis")
    expand.add_argument("n", type=_positive)
    expand.add_argument("k", type=_positive)
    expand.add_argument("--basis", choices=("e", "f", "m", "s"), default="e")
    expand.add_argument("--format", choices=("json", "csv"), default="json")
    expand.add_argument(
        "--oracle", action="store_true",
        help="recompute via the eigenoperator route and diff",
    )
    expand.set_defaults(func=_cmd_expand)

    verify = sub.add_parser("verify", help="run an identity suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--n-max", type=_positive, default=None)
    verify.add_argument("--k-max", type=_positive, default=None)
    verify.add_argument("--degree-max", type=int, default=None)
    verify.add_argument(
        "--threads", type=_positive, default=os.cpu_count() or 1,
        help="cap on worker threads; output bytes do not depend on it",
    )
    verify.add_argument(
        "--audit", type=int, default=None, metavar="DEGREE",
        help="involution only: dump the pairings of one degree slice",
    )
    verify.add_argument(
        "--timing", action="store_true",
        help="include wall-clock duration in the report",
    )
    verify.set_defaults(func=_cmd_verify)

    phi = sub.add_parser(
        "phi", help="decorated path JSON -> M-sequence JSON"
    )
    phi.add_argument("object", help="JSON object, or - to read stdin")
    phi.set_defaults(func=_cmd_phi)

    phi_inv = sub.add_parser(
        "phi-inverse", help="M-sequence JSON -> decorated path JSON"
    )
    phi_inv.add_argument("object", help="JSON object, or - to read stdin")
    phi_inv.set_defaults(func=_cmd_phi_inverse)

    hilbert = sub.add_parser("hilbert", help="Hilbert series polynomials")
    hilbert.add_argument("n", type=_positive)
    hilbert.add_argument("--k", type=_positive, default=None)
    hilbert.set_defaults(func=_cmd_hilbert)

    schur = sub.add_parser("schur", help="Schur expansion of the image")
    schur.add_argument("n", type=_positive)
    schur.add_argument("k", type=_positive)
    schur.set_defaults(func=_cmd_schur)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("expand", "schur"):
        if not args.k <= args.n <= degree_bound():
            parser.error("need 1 <= k <= n <= %d" % degree_bound())
    if args.command == "hilbert":
        if args.k is not None and not args.k <= args.n:
            parser.error("need k <= n")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
