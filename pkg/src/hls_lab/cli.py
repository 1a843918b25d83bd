"""Command-line entry point: ``hls-lab {compute, expand, verify, census, export}``.

Reports are JSON lines on stdout. Exit codes: 0 success, 1 a verification
failed, 2 usage error (argparse's own convention).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable

from . import hls, oracle, poset, reference, special
from .algebra import LaurentPoly, RatFunc, X, Y, Z, q, rat_equal, series_expand, t, u, y
from .hls import BudgetError
from .tableaux import TableauError, enumerate_tableaux, is_horizontal_strip

SERIES = ("hls", "coarse", "affS_in", "affS_pr", "HS", "hecke", "quiver", "igusa", "symplectic", "weak-order")


class UsageError(Exception):
    pass


def _series(name: str, n: int, y0: int | None = None) -> RatFunc:
    if name == "hls":
        f = hls.hls_series(n).ratfunc()
        return f if y0 is None else hls.special_value_Y(f, y0)
    if name == "coarse":
        return hls.coarsen(n, y0)
    if name == "affS_in":
        return special.affine_schubert(n, "intersection")
    if name == "affS_pr":
        return special.affine_schubert(n, "projection")
    if name == "HS":
        return special.hermite_smith(n)
    if name == "hecke":
        return special.hecke(n, route="substitution").series()
    if name == "quiver":
        return special.quiver_zeta(n)
    if name == "igusa":
        return special.igusa(n)
    if name == "symplectic":
        return special.symplectic_integral(n)
    if name == "weak-order":
        return special.weak_order_zeta(n)
    raise UsageError(f"--series: unknown series {name!r}")


def _default_grading(name: str, n: int) -> list:
    if name in ("hls", "weak-order"):
        return list(_series(name, n).variables() - {Y})
    if name == "coarse":
        return [X]
    if name in ("affS_in", "affS_pr"):
        return [Z(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    if name == "HS":
        return [y(i) for i in range(1, n + 1)]
    if name == "hecke":
        return [X]
    if name == "quiver":
        return [t(i) for i in range(1, n + 1)]
    if name == "symplectic":
        return [u]
    return list(_series(name, n).variables() - {Y})


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# verify


@dataclass(frozen=True)
class Check:
    run: Callable[[argparse.Namespace, int], object]
    fast_ns: tuple[int, ...]
    conjecture: bool = False
    oracle: bool = False


def _all_true(v) -> bool:
    if isinstance(v, dict):
        return all(_all_true(w) for w in v.values())
    return bool(v)


def _golden_numerator(_, n):
    return hls.numerator(n) == reference.reference_numerator(n)


def _reference_tables(_, n):
    out = {
        "hls": hls.numerator(n) == reference.reference_numerator(n),
        "hecke": special.hecke_numerator(n, "tableau") == reference.reference_hecke_numerator(n),
    }
    for name, f in (
        ("affS_in", special.affine_schubert(n, "intersection")),
        ("affS_pr", special.affine_schubert(n, "projection")),
        ("HS", special.hermite_smith(n)),
        ("quiver", special.quiver_zeta(n)),
    ):
        out[name] = rat_equal(f, reference.reference_series(name, n))
    return out


def _linear_term(_, n):
    return not hls.linear_coefficients(hls.numerator(n))


def _coarse_y1(_, n):
    f = hls.coarsen(n, 1)
    return rat_equal(f, RatFunc(hls.eulerian(n), [1 - LaurentPoly.var(X)] * n))


def _h_vector_y0(_, n):
    h = hls.h_vector(n, 0)
    c = h.coefficients
    h1 = c[1] if len(c) > 1 else 0
    return {
        "nonnegative": all(v >= 0 for v in c) and c[0] == 1,
        "h1": h1 == 2**n - 1 - comb(n + 1, 2),
        "thrall_sum": h.total == poset.thrall_count(n),
    }


def _hecke_routes(_, n):
    return special.hecke_numerator(n, "tableau") == special.hecke_numerator(n, "substitution")


def _conj_depth(_, n):
    c = hls.h_vector(n, 0).coefficients
    k = comb(n - 1, 2)
    c = c + [0] * max(0, k + 1 - len(c))
    return {
        "positive_then_zero": all(v > 0 for v in c[: k + 1]) and all(v == 0 for v in c[k + 1 :]),
        "palindromic": c[: k + 1] == c[: k + 1][::-1],
    }


def minus_one_h_sum(n: int) -> int:
    """``binom(n,2)! / prod_{i<n} (2i-1)^(n-i)``."""
    den = 1
    for i in range(1, n):
        den *= (2 * i - 1) ** (n - i)
    return factorial(comb(n, 2)) // den


def _conj_minus_one(_, n):
    h = hls.h_vector(n, -1)
    c = h.coefficients
    r = comb(n + 1, 2)
    h1 = c[1] if len(c) > 1 else 0
    zeros = {i for i, v in enumerate(c) if v == 0}
    return {
        "exponent": h.reduced_exponent == r and len(c) <= r,
        "nonnegative": all(v >= 0 for v in c),
        "h_sum": h.total == minus_one_h_sum(n),
        "h1": h1 == 2**n - 1 - r,
        "zero_pattern": zeros == ({1} if n == 2 else set()),
    }


def _oracle_fnT(a, n):
    return oracle.verify_fnT(n, a.p, a.max_index_exp)


def _oracle_series(target):
    return lambda a, n: oracle.verify_series_coefficients(n, a.p, a.max_index_exp, target)


def _oracle_extensions(a, n):
    p, B = a.p, a.max_index_exp
    ok = True
    for base in oracle.enumerate_sublattices(n - 1, p, B):
        mu = oracle.smith_type(base)
        for lam in _partitions_up_to(B, n):
            if not is_horizontal_strip(lam, mu):
                continue
            for kind in ("intersection", "projection"):
                want = oracle.extension_formula(lam, mu, n, kind).evaluate({q: p})
                ok = ok and oracle.count_extensions(n, p, base, lam, kind) == want
    return ok


def _oracle_quiver(a, n):
    return oracle.verify_quiver(n, a.p, a.max_index_exp, "count")


def _partitions_up_to(total: int, length: int):
    def gen(rest, maxpart, slots):
        yield ()
        if slots == 0:
            return
        for a in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - a, a, slots - 1):
                yield (a,) + tail

    return list(gen(total, total, length))


CHECKS: dict[str, Check] = {
    "functional-equation": Check(lambda a, n: hls.verify_functional_equation(n), (1, 2, 3)),
    "golden-numerator": Check(_golden_numerator, (1, 2, 3)),
    "reference-tables": Check(_reference_tables, (1, 2, 3)),
    "linear-term": Check(_linear_term, (1, 2, 3)),
    "coarse-y1": Check(_coarse_y1, (1, 2, 3)),
    "h-vector-y0": Check(_h_vector_y0, (1, 2, 3)),
    "igusa": Check(lambda a, n: special.igusa_identity(n), (1, 2, 3)),
    "weak-order": Check(lambda a, n: special.weak_order_identity(n), (1, 2, 3)),
    "lattice-zeta": Check(lambda a, n: special.lattice_zeta_checks(n), (1, 2, 3)),
    "littlewood": Check(lambda a, n: special.littlewood_checks(n), (1, 2, 3)),
    "symplectic-bgs": Check(
        lambda a, n: rat_equal(special.symplectic_integral(n), special.bgs_descent_form(n)), (1, 2, 3)
    ),
    "hs-through-affine": Check(lambda a, n: special.hs_through_affine(n), (1, 2, 3)),
    "reciprocity": Check(lambda a, n: special.reciprocity_checks(n), (1, 2, 3)),
    "hecke-routes": Check(_hecke_routes, (1, 2, 3)),
    "hecke-bn-invariance": Check(lambda a, n: special.hecke_bn_invariance(n), (1, 2, 3)),
    "hecke-vanishing": Check(lambda a, n: special.hecke_vanishing(n), (1, 2, 3)),
    "hecke-palindromic": Check(lambda a, n: special.hecke_palindromic(n), (1, 2, 3)),
    "bruhat-iso": Check(lambda a, n: poset.bruhat_iso_check(n), (1, 2, 3)),
    "graded": Check(
        lambda a, n: (lambda c: c.graded and c.rank == comb(n + 1, 2) - 1)(poset.chain_census(n)), (1, 2, 3)
    ),
    "fnT": Check(_oracle_fnT, (1, 2, 3), oracle=True),
    "series-affS_in": Check(_oracle_series("affS_in"), (1, 2, 3), oracle=True),
    "series-affS_pr": Check(_oracle_series("affS_pr"), (1, 2, 3), oracle=True),
    "series-HS": Check(_oracle_series("HS"), (1, 2, 3), oracle=True),
    "extensions": Check(_oracle_extensions, (2, 3), oracle=True),
    "quiver-oracle": Check(_oracle_quiver, (1, 2, 3), oracle=True),
    "conjecture-depth": Check(_conj_depth, (1, 2, 3, 4, 5), conjecture=True),
    "conjecture-y-minus-one": Check(_conj_minus_one, (1, 2, 3, 4), conjecture=True),
}


def _run_check(name: str, n: int, args, out) -> bool:
    check = CHECKS[name]
    start = time.perf_counter()
    detail = None
    try:
        value = check.run(args, n)
        ok = _all_true(value)
        if isinstance(value, dict):
            detail = value
        if check.conjecture:
            status = "conjecture-consistent" if ok else "conjecture-inconsistent"
        else:
            status = "pass" if ok else "fail"
    except (BudgetError, oracle.OracleError, TableauError, poset.PosetError, ValueError) as exc:
        ok, status, detail = False, "error", str(exc)
    report = {
        "check": name,
        "n": n,
        "status": status,
        "millis": int((time.perf_counter() - start) * 1000),
    }
    if check.oracle:
        report.update(p=args.p, max_index_exp=args.max_index_exp)
    if detail is not None:
        report["detail"] = detail
    _emit(report, out)
    return ok


def cmd_verify(args, out) -> int:
    if args.all:
        names = list(CHECKS)
    elif args.check:
        if args.check not in CHECKS:
            raise UsageError(f"--check: unknown check {args.check!r}; known: {', '.join(CHECKS)}")
        names = [args.check]
    else:
        raise UsageError("verify needs --check NAME or --all")
    ok = True
    for name in names:
        ns = [args.n] if args.n is not None else list(CHECKS[name].fast_ns if (args.fast or args.all) else (2,))
        for n in ns:
            ok = _run_check(name, n, args, out) and ok
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# compute / expand / export / census


def cmd_compute(args, out) -> int:
    f = _series(args.series, args.n, args.y0)
    if args.format == "latex":
        out.write(f.to_latex() + "\n")
    elif args.format == "text":
        out.write(str(f) + "\n")
    else:
        _emit({"series": args.series, "n": args.n, **f.to_json()}, out)
    return 0


def cmd_expand(args, out) -> int:
    f = _series(args.series, args.n, args.y0)
    grading = _default_grading(args.series, args.n)
    s = series_expand(f, grading, args.bound)
    if args.format == "json":
        _emit(
            {
                "series": args.series,
                "n": args.n,
                "bound": args.bound,
                "grading": sorted(v.name for v in grading),
                "terms": s.to_json(),
            },
            out,
        )
    else:
        out.write((s.to_latex() if args.format == "latex" else str(s)) + "\n")
    return 0


def cmd_export(args, out) -> int:
    n = args.n
    if args.what == "hasse":
        out.write(poset.to_dot(n))
    elif args.what == "chain-census":
        _emit(poset.chain_census(n).to_json(), out)
    elif args.what == "tableaux":
        for T in enumerate_tableaux(n):
            _emit(T.to_json(), out)
    elif args.what == "numerator":
        _emit(hls.hls_series(n).to_json(), out)
    elif args.what == "hecke":
        _emit(special.hecke(n).to_json(), out)
    elif args.what == "h-vector":
        for y0 in (0, -1):
            _emit(hls.h_vector(n, y0).to_json(), out)
    return 0


def _census_key(by: str, key) -> dict:
    if by == "tableau":
        return {"intersection": [list(c) for c in key[0]], "projection": [list(c) for c in key[1]]}
    if by == "delta":
        return {"delta": list(key)}
    if by == "type":
        return {"type": list(key)}
    tin, tpr, delta, lam = key
    return {
        "intersection": [list(c) for c in tin],
        "projection": [list(c) for c in tpr],
        "delta": list(delta),
        "type": list(lam),
    }


def cmd_census(args, out) -> int:
    C = oracle.census(args.n, args.p, args.max_index_exp)
    grouped = C.grouped(args.group_by)
    if args.out == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["tableau-json", "delta", "type", "count"])
        # columns the grouping collapses stay empty
        for key, c in grouped.items():
            row = _census_key(args.group_by, key)
            tab = json.dumps({k: row[k] for k in ("intersection", "projection")}) if "intersection" in row else ""
            delta = json.dumps(row["delta"]) if "delta" in row else ""
            lam = json.dumps(row["type"]) if "type" in row else ""
            w.writerow([tab, delta, lam, c])
        out.write(buf.getvalue())
    else:
        for key, c in grouped.items():
            _emit({**_census_key(args.group_by, key), "count": c}, out)
        _emit({"n": C.n, "p": C.p, "max_index_exp": C.B, "total": C.total()}, out)
    return 0


# ---------------------------------------------------------------------------
# parser


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="accepted and ignored; all output is deterministic")

    parser = argparse.ArgumentParser(prog="hls-lab", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="print a series as a rational function")
    p.add_argument("--series", choices=SERIES, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--y0", type=int, choices=(0, 1, -1), default=None, help="specialize Y (hls, coarse)")
    p.add_argument("--format", choices=("json", "latex", "text"), default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("expand", parents=[common], help="truncated power series expansion")
    p.add_argument("--series", choices=SERIES, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--y0", type=int, choices=(0, 1, -1), default=None)
    p.add_argument("--bound", type=_nonnegative, default=4, help="total degree bound")
    p.add_argument("--format", choices=("json", "latex", "text"), default="json")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", parents=[common], help="run named checks")
    p.add_argument("--check", default=None, help="check name; see --list")
    p.add_argument("--all", action="store_true")
    p.add_argument("--fast", action="store_true", help="run the small-n suite of each check")
    p.add_argument("--list", action="store_true", help="list check names and exit")
    p.add_argument("--n", type=_positive, default=None)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--max-index-exp", type=_nonnegative, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="brute-force lattice census")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-index-exp", type=_nonnegative, required=True)
    p.add_argument("--group-by", choices=("tableau", "delta", "type", "all"), default="all")
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("export", parents=[common], help="export data for other tools")
    p.add_argument("--what", choices=("hasse", "chain-census", "tableaux", "numerator", "hecke", "h-vector"), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "list", False):
        for name in CHECKS:
            out.write(name + "\n")
        return 0
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"hls-lab: error: {exc}\n")
        return 2
    except (BudgetError, oracle.OracleError, TableauError, poset.PosetError) as exc:
        sys.stderr.write(f"hls-lab: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
