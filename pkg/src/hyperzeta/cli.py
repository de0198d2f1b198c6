"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import defaultdict

from . import analytics, verify
from ._arith import square_unit_residues
from .cache import cached_primes, cached_sieve
from .dirichlet import sieve_tables, theorem11_coeffs
from .enumeration import bruteforce_am, enumerate_sublattices
from .errors import DomainError, UnsupportedError, UsageError
from .lattice import BasisTriple, canonicalize, class_invariant, gram, invariant_B
from .squareclass import EulerEvalConfig, h_error_bound, h_eval

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human",
                        help="output format (default: human)")
    common.add_argument("--cache", metavar="PATH",
                        help="binary cache file for sieve tables / prime lists")

    p = _Parser(prog="hyperzeta",
                description="Zeta functions of proper isometry classes of sublattices "
                            "of the hyperbolic plane.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("canonicalize", parents=[common],
                       help="normal form (n, A, B) of Z(alpha e1 + beta e2) + Z(gamma e2)")
    c.add_argument("--alpha", type=int, required=True)
    c.add_argument("--beta", type=int, required=True)
    c.add_argument("--gamma", type=int, required=True)

    c = sub.add_parser("coeffs", parents=[common], help="coefficients a_m^+ for m <= limit")
    c.add_argument("--B", type=_positive, required=True)
    c.add_argument("--A", type=int, default=1, help="any A coprime to B (brute force only)")
    c.add_argument("--limit", type=_positive, default=1000)
    c.add_argument("--method", choices=("formula", "brute", "both"), default="formula")

    c = sub.add_parser("classes", parents=[common],
                       help="index-m sublattices grouped by proper isometry class")
    c.add_argument("--A", type=int, default=1)
    c.add_argument("--B", type=_positive, required=True)
    c.add_argument("--index", type=_positive, required=True)

    c = sub.add_parser("ratio", parents=[common], help="residue at s=2 and the ratio r")
    c.add_argument("--B", type=_positive, required=True)
    c.add_argument("--prime-limit", type=_positive, default=analytics.DEFAULT_PRIME_LIMIT)

    c = sub.add_parser("table1", parents=[common], help="r and 2r-1 for the standard list of B")
    c.add_argument("--prime-limit", type=_positive, default=analytics.DEFAULT_PRIME_LIMIT)

    c = sub.add_parser("hb", parents=[common], help="evaluate H_b(s)")
    c.add_argument("--b", type=_positive, required=True)
    c.add_argument("--s", type=float, default=2.0)
    c.add_argument("--prime-limit", type=_positive, default=analytics.DEFAULT_PRIME_LIMIT)
    c.add_argument("--mode", choices=("general", "closed", "both"), default="both")

    c = sub.add_parser("verify", parents=[common], help="run self-check suites")
    c.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    c.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    c.add_argument("--limit", type=_positive, default=60,
                   help="size parameter for the suites (default 60)")
    return p


def _emit(out, fmt, command, params, rows, extra=None, lines=()):
    if fmt == "json":
        doc = {"command": command, "params": params, "results": rows}
        doc.update(extra or {})
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    cols = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
        return
    if rows:
        cells = [[str(r[c]) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        out.write("  ".join(c.rjust(w) for c, w in zip(cols, widths)) + "\n")
        for row in cells:
            out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)) + "\n")
    for line in lines:
        out.write(line + "\n")


def _cmd_canonicalize(a, out):
    t = BasisTriple(a.alpha, a.beta, a.gamma)
    L = canonicalize(t)
    g = gram(L)
    row = {"n": L.n, "A": L.A, "B": L.B,
           "gram": "[[{}, {}], [{}, {}]]".format(*g), "invariant_B": invariant_B(L)}
    _emit(out, a.format, "canonicalize",
          {"alpha": a.alpha, "beta": a.beta, "gamma": a.gamma}, [row])
    return EXIT_OK


def _cmd_coeffs(a, out):
    rows = [{"m": m} for m in range(1, a.limit + 1)]
    if a.method in ("formula", "both"):
        tables = (cached_sieve(a.cache, a.limit) if a.cache else sieve_tables(a.limit))
        f = theorem11_coeffs(a.B, a.limit, tables)
        for r in rows:
            r["formula"] = f[r["m"]]
    if a.method in ("brute", "both"):
        for r in rows:
            r["brute"] = bruteforce_am(a.A, a.B, r["m"])
    extra, lines, code = {}, [], EXIT_OK
    if a.method == "both":
        match = all(r["formula"] == r["brute"] for r in rows)
        extra["match"] = match
        lines = ["MATCH" if match else "MISMATCH"]
        code = EXIT_OK if match else EXIT_VERIFY
    params = {"A": a.A, "B": a.B, "limit": a.limit, "method": a.method}
    _emit(out, a.format, "coeffs", params, rows, extra, lines)
    return code


def _cmd_classes(a, out):
    groups = defaultdict(list)
    for K in enumerate_sublattices(a.index):
        groups[class_invariant(a.A, a.B, K)].append(K)
    rows = []
    for inv in sorted(groups, key=lambda q: (q.to_fraction(), q.den)):
        members = groups[inv]
        rows.append({"invariant": str(inv), "size": len(members),
                     "members": " ".join(f"({K.a},{K.b},{K.d})" for K in members)})
    params = {"A": a.A, "B": a.B, "index": a.index}
    _emit(out, a.format, "classes", params, rows, {"class_count": len(rows)},
          [f"{len(rows)} proper classes among {sum(r['size'] for r in rows)} sublattices"])
    return EXIT_OK


def _ratio_rows(reports):
    return [r.as_row() for r in reports]


def _cmd_ratio(a, out):
    if a.cache:
        cached_primes(a.cache, a.prime_limit)
    rep = analytics.ratio_r(a.B, a.prime_limit)
    _emit(out, a.format, "ratio", {"B": a.B, "prime_limit": a.prime_limit},
          _ratio_rows([rep]), {"error_bound": rep.error_bound})
    return EXIT_OK


def _cmd_table1(a, out):
    if a.cache:
        cached_primes(a.cache, a.prime_limit)
    reps = analytics.table1(a.prime_limit)
    rows = [{"B": r.B, "r": round(r.r, 4), "two_r_minus_one": round(r.two_r_minus_one, 4),
             "r_full": r.r, "error_bound": r.error_bound} for r in reps]
    _emit(out, a.format, "table1", {"prime_limit": a.prime_limit}, rows,
          {"error_bound": max(r.error_bound for r in reps)})
    return EXIT_OK


def _cmd_hb(a, out):
    if a.cache:
        cached_primes(a.cache, a.prime_limit)
    cfg = EulerEvalConfig(a.s, a.prime_limit)
    modes = ("general", "closed") if a.mode == "both" else (a.mode,)
    rows = []
    for mode in modes:
        try:
            rows.append({"mode": mode, "value": h_eval(a.b, cfg, mode)})
        except UnsupportedError as exc:
            if a.mode != "both":
                raise
            rows.append({"mode": mode, "value": None, "note": str(exc)})
    params = {"b": a.b, "s": a.s, "prime_limit": a.prime_limit, "mode": a.mode,
              "order": len(square_unit_residues(a.b))}
    bound = h_error_bound(a.b, a.s, a.prime_limit)
    _emit(out, a.format, "hb", params, rows, {"error_bound": bound})
    return EXIT_OK


def _cmd_verify(a, out):
    checks = verify.run_suite(a.suite, limit=a.limit, seed=a.seed)
    ok = all(c.passed for c in checks)
    _emit(out, a.format, "verify", {"suite": a.suite, "seed": a.seed, "limit": a.limit},
          [c.as_row() for c in checks], {"passed": ok},
          [f"{sum(c.passed for c in checks)}/{len(checks)} checks passed"])
    return EXIT_OK if ok else EXIT_VERIFY


_COMMANDS = {
    "canonicalize": _cmd_canonicalize,
    "coeffs": _cmd_coeffs,
    "classes": _cmd_classes,
    "ratio": _cmd_ratio,
    "table1": _cmd_table1,
    "hb": _cmd_hb,
    "verify": _cmd_verify,
}


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except (DomainError, UsageError, UnsupportedError) as exc:
        print(f"hyperzeta {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
