"""Command-line interface: ``halfpow {coeffs,table,constant,verify,identities}``.

Exit codes: 0 success, 1 verification or identity failure, 2 usage error,
3 convergence failure (requested accuracy unreachable at the given precision).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, List, Optional

from .errors import ConvergenceParameters
from .exact_core import PolyQ
from .identities import run_suite
from .numeric_eval import DEFAULT_PRECISION, C_constant, _sci, tau0_consistency, verify_identity
from .ramanujan_coeffs import CoeffSet, coeffset, odd_indices

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONVERGENCE = 0, 1, 2, 3

DEFAULT_TABLE_KS = (9, 11, 13, 15)


# -- serialization ---------------------------------------------------------
def _pair(q: Fraction) -> List[int]:
    return [q.numerator, q.denominator]


def coeffset_to_record(cs: CoeffSet, constant=None, precision: Optional[int] = None) -> dict:
    """JSON-ready record: ``P`` ascending in powers of n, ``A`` for odd i >= 3."""
    top = (cs.k + 1) // 2
    rec = {
        "k": cs.k,
        "P": [_pair(cs.P.coeff(j)) for j in range(top + 1)],
        "A": {str(i): _pair(cs.A[i]) for i in odd_indices(cs.k) if i >= 3},
    }
    if constant is not None:
        rec["C"] = {
            "value": constant.decimal(),
            "err": constant.err_decimal(),
            "precision_bits": precision if precision is not None else constant.prec,
        }
    return rec


def record_to_coeffset(rec: dict) -> CoeffSet:
    k = int(rec["k"])
    A = {i: Fraction(0) for i in odd_indices(k)}
    for key, (num, den) in rec["A"].items():
        A[int(key)] = Fraction(num, den)
    P = PolyQ(Fraction(num, den) for num, den in rec["P"])
    return CoeffSet(k=k, P=P, A=MappingProxyType(A), route="json")


# -- rendering -------------------------------------------------------------
def _plain_coeffs(cs: CoeffSet) -> str:
    parts = [f"P_{cs.k}(n) = {cs.P}"]
    parts += [f"A_{i} = {a}" for i, a in cs.tau_terms()]
    return " ; ".join(parts)


def _latex_frac(q: Fraction) -> str:
    q = abs(q)
    return str(q.numerator) if q.denominator == 1 else rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _latex_half_power(twice: int) -> str:
    return rf"n^{{\frac{{{twice}}}{{2}}}}"


def _latex_coeffs(cs: CoeffSet) -> str:
    k = cs.k
    terms = []
    for j in range(cs.P.degree, -1, -1):
        c = cs.P.coeff(j)
        if c:
            terms.append((c, _latex_frac(c) + _latex_half_power(2 * j + 1)))
    for i, a in cs.tau_terms():
        terms.append((a, _latex_frac(a) + rf"\tau(n,{i})"))
    body = f"C_{{{k}}}"
    for c, t in terms:
        body += (" - " if c < 0 else " + ") + t
    return rf"\sum_{{i=1}}^{{n}} i^{{\frac{{{k}}}{{2}}}} = {body}"


def _table_row(k: int) -> List[Fraction]:
    A = coeffset(k).A
    return [A[i] for i in odd_indices(k)]


def render_table(ks: Iterable[int], fmt: str) -> str:
    ks = list(ks)
    if fmt == "json":
        return "\n".join(
            json.dumps({"k": k, "A": [_pair(a) for a in _table_row(k)]}, separators=(",", ":")) for k in ks
        )
    if fmt == "latex":
        lines = [r"\begin{tabular}{r|l}", r"$k$ & $A^k_1,\ A^k_3,\ \dots,\ A^k_{k+2}$ \\", r"\hline\hline"]
        for k in ks:
            cells = ", ".join(
                "$0$" if a == 0 else f"${'-' if a < 0 else ''}{_latex_frac(a)}$" for a in _table_row(k)
            )
            lines.append(rf"{k} & {cells} \\")
            lines.append(r"\hline")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    lines = ["k | A_1, A_3, ..., A_{k+2}"]
    lines += [f"{k} | " + ", ".join(str(a) for a in _table_row(k)) for k in ks]
    return "\n".join(lines)


# -- argument handling -----------------------------------------------------
def _odd_k(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an odd positive integer, got {text!r}") from None
    if k < 1 or k % 2 == 0:
        raise argparse.ArgumentTypeError(f"k must be an odd positive integer, got {k}")
    return k


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _default_prec() -> int:
    env = os.environ.get("HALFPOW_PREC")
    if env:
        try:
            return _positive_int(env)
        except (ValueError, argparse.ArgumentTypeError):
            pass
    return DEFAULT_PRECISION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfpow", description="Exact decomposition of sums of half-integer powers."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("plain", "json", "latex"), default="plain")

    p = sub.add_parser("coeffs", help="exact P_k and A^k_i for one k")
    p.add_argument("--k", type=_odd_k, required=True)
    p.add_argument("--format", **fmt)
    p.add_argument("--with-constant", action="store_true", help="include C_k in JSON output")
    p.add_argument("--prec", type=_positive_int, default=None)

    p = sub.add_parser("table", help="table of A^k_i rows")
    p.add_argument("--k", type=_odd_k, nargs="+", default=list(DEFAULT_TABLE_KS))
    p.add_argument("--format", **fmt)

    p = sub.add_parser("constant", help="numeric value of C_k with an error bound")
    p.add_argument("--k", type=_odd_k, required=True)
    p.add_argument("--prec", type=_positive_int, default=None)
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("verify", help="check the identity numerically on a grid of n")
    p.add_argument("--k", type=_odd_k, nargs="+", required=True)
    p.add_argument("--n-max", type=_positive_int, default=None)
    p.add_argument("--n", type=_positive_int, default=None, help="check a single n")
    p.add_argument("--prec", type=_positive_int, default=None)
    p.add_argument("--tol", type=str, default=None, help="decimal bound on |residual|")
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("identities", help="run the exact identity suite")
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--k-max", type=_odd_k, default=31)
    p.add_argument("--samples", type=_positive_int, default=500, help="randomized duality instances")
    return parser


# -- commands ----------------------------------------------------------------
def cmd_coeffs(args, out) -> int:
    cs = coeffset(args.k)
    if args.format == "json":
        prec = args.prec or _default_prec()
        c = C_constant(args.k, prec) if args.with_constant else None
        print(json.dumps(coeffset_to_record(cs, c, prec), separators=(",", ":")), file=out)
    elif args.format == "latex":
        print(_latex_coeffs(cs), file=out)
    else:
        print(_plain_coeffs(cs), file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    print(render_table(args.k, args.format), file=out)
    return EXIT_OK


def cmd_constant(args, out) -> int:
    prec = args.prec or _default_prec()
    c = C_constant(args.k, prec)
    check = None
    if args.k == 1:
        _, _, check = tau0_consistency(prec)
    if args.format == "json":
        rec = {"k": args.k, "C": {"value": c.decimal(), "err": c.err_decimal(), "precision_bits": prec}}
        if check is not None:
            rec["tau0_check"] = check
        print(json.dumps(rec, separators=(",", ":")), file=out)
    else:
        print(f"C_{args.k} = {c.decimal()}", file=out)
        print(f"err <= {c.err_decimal()} ({prec} bits)", file=out)
        if check is not None:
            print(f"tau(0,3) = -6 C_1 within error bounds: {'yes' if check else 'NO'}", file=out)
    return EXIT_OK if check in (None, True) else EXIT_FAIL


def cmd_verify(args, out) -> int:
    prec = args.prec or _default_prec()
    if args.n is not None:
        ns = [args.n]
    elif args.n_max is not None:
        ns = list(range(1, args.n_max + 1))
    else:
        raise _Usage("verify needs --n or --n-max")
    failures = 0
    for k in sorted(set(args.k)):
        worst = None
        k_fail = 0
        for n in ns:
            v = verify_identity(k, n, prec, args.tol)
            ok = v.passed and v.within_tol
            k_fail += not ok
            if worst is None or v.residual.abs_hi() > worst:
                worst = v.residual.abs_hi()
            if args.format == "json":
                rec = {
                    "k": k,
                    "n": n,
                    "residual": v.residual.decimal(),
                    "err": v.residual.err_decimal(),
                    "pass": ok,
                }
                print(json.dumps(rec, separators=(",", ":")), file=out)
        if args.format == "plain":
            status = "PASS" if not k_fail else "FAIL"
            print(
                f"{status} k={k} n={ns[0]}..{ns[-1]}: {len(ns) - k_fail}/{len(ns)} cells, "
                f"max |residual| + err = {_sci(worst, 6)}",
                file=out,
            )
        failures += k_fail
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_identities(args, out) -> int:
    if args.order < 4:
        raise _Usage("--order must be at least 4")
    results = run_suite(order=args.order, k_max=args.k_max, samples=args.samples)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.detail})", file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


class _Usage(Exception):
    pass


COMMANDS = {
    "coeffs": cmd_coeffs,
    "table": cmd_table,
    "constant": cmd_constant,
    "verify": cmd_verify,
    "identities": cmd_identities,
}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except _Usage as e:
        parser.print_usage(sys.stderr)
        print(f"halfpow: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceParameters as e:
        print(f"halfpow: convergence failure: {e}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
