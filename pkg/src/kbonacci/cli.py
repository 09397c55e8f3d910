"""Command-line front end: count, enumerate, series, verify, asymptotics.

Every subcommand is deterministic (identical flags produce identical
bytes), numbers that can grow without bound are serialized as decimal
strings in JSON, and `verify` exits nonzero when any check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import formulas, graph, polyomino, series, verify, words
from .formulas import format_fraction

SERIES_FAMILIES = ("poly", "graph", "degree", "ham")
TOTAL_FAMILIES = tuple(f"{name}-total" for name in verify.TOTALS)
VERIFY_SUITES = ("all", "poly", "graph", "degree", "ham", "totals",
                 "formulas", "reversal")


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _k_param(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output format (default text)")
    common.add_argument("--ham-cap", type=_positive, default=verify.DEFAULT_HAM_CAP,
                        metavar="N",
                        help="max word length for Hamiltonicity backtracking "
                             f"(default {verify.DEFAULT_HAM_CAP})")

    parser = argparse.ArgumentParser(
        prog="kbonacci",
        description="Exact enumeration of binary words avoiding k consecutive "
                    "1's, their bargraph polyominoes and grid graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common],
                       help="number of valid words of length n")
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--k", type=_k_param, default=2)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list words, optionally with their statistics")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_k_param, default=2)
    p.add_argument("--with-stats", action="store_true",
                   help="add area, semiperimeter, vertex/edge counts, degree "
                        "profile and Hamiltonicity")
    p.add_argument("--render", action="store_true",
                   help="draw each polyomino as two rows of block characters")
    p.add_argument("--dot", action="store_true",
                   help="emit each word's grid graph in DOT format instead")

    p = sub.add_parser("series", parents=[common],
                       help="expand a generating function")
    p.add_argument("--family", required=True,
                   choices=SERIES_FAMILIES + TOTAL_FAMILIES)
    p.add_argument("--k", type=_k_param, default=2)
    p.add_argument("--terms", type=_positive, default=10)
    p.add_argument("--vars-at-1", default="", metavar="VARS",
                   help="comma-separated auxiliary variables to set to 1")

    p = sub.add_parser("verify", parents=[common],
                       help="run oracle cross-checks; exit 0 iff all pass")
    p.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    p.add_argument("--max-n", type=_positive, default=10)
    p.add_argument("--max-k", type=_k_param, default=5)

    p = sub.add_parser("asymptotics", parents=[common],
                       help="empirical degree proportion vs its exact limit")
    p.add_argument("--degree", type=int, choices=(2, 3, 4), required=True)
    p.add_argument("--n", type=_positive, default=2000)

    return parser


def cmd_count(args) -> int:
    value = words.count_words(args.n, args.k)
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k, "count": str(value)}))
    elif args.format == "csv":
        print("n,k,count")
        print(f"{args.n},{args.k},{value}")
    else:
        print(value)
    return 0


def _word_stats(w: words.Word, ham_cap: int) -> dict:
    p = polyomino.from_word(w)
    g = graph.build_graph(p)
    d2, d3, d4 = graph.degree_profile(g)
    ham = graph.is_hamiltonian(g) if len(w) <= ham_cap else None
    return {
        "word": w.text,
        "heights": list(p.heights),
        "area": polyomino.area(p),
        "sper": polyomino.semiperimeter(p),
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "deg": [d2, d3, d4],
        "hamiltonian": ham,
    }


def cmd_enumerate(args) -> int:
    wordlist = words.enumerate_words(args.n, args.k)
    if args.dot:
        for w in wordlist:
            g = graph.build_graph(polyomino.from_word(w))
            print(graph.to_dot(g, name=f"w{w.text}"))
        return 0
    if args.render:
        for w in wordlist:
            print(w.text or "ε")
            print(polyomino.render(polyomino.from_word(w)))
            print()
        return 0
    if not args.with_stats:
        if args.format == "json":
            print(json.dumps([{"word": w.text} for w in wordlist]))
        elif args.format == "csv":
            print("word")
            for w in wordlist:
                print(w.text)
        else:
            for w in wordlist:
                print(w.text or "ε")
        return 0
    rows = [_word_stats(w, args.ham_cap) for w in wordlist]
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        print("word,area,sper,ver,edg,d2,d3,d4,ham")
        for r in rows:
            ham = "-" if r["hamiltonian"] is None else str(r["hamiltonian"]).lower()
            print(f"{r['word']},{r['area']},{r['sper']},{r['vertices']},"
                  f"{r['edges']},{r['deg'][0]},{r['deg'][1]},{r['deg'][2]},{ham}")
    else:
        print(f"{'word':<{max(4, args.n)}} {'area':>4} {'sper':>4} {'ver':>4} "
              f"{'edg':>4} {'d2':>3} {'d3':>3} {'d4':>3} ham")
        for r in rows:
            ham = "-" if r["hamiltonian"] is None else str(r["hamiltonian"]).lower()
            print(f"{r['word'] or chr(0x3b5):<{max(4, args.n)}} {r['area']:>4} "
                  f"{r['sper']:>4} {r['vertices']:>4} {r['edges']:>4} "
                  f"{r['deg'][0]:>3} {r['deg'][1]:>3} {r['deg'][2]:>3} {ham}")
    return 0


def _series_gf(family: str, k: int) -> series.RationalGF:
    if family.endswith("-total"):
        return series.gf_named_total(family[:-len("-total")], k)
    builders = {
        "poly": series.gf_polyomino,
        "graph": series.gf_graph,
        "degree": series.gf_degree,
        "ham": series.gf_hamiltonian,
    }
    return builders[family](k)


def cmd_series(args) -> int:
    gf = _series_gf(args.family, args.k)
    at_one = [v for v in args.vars_at_1.split(",") if v]
    unknown = set(at_one) - set(gf.aux_variables)
    if unknown:
        print(f"error: variables {sorted(unknown)} not in {gf.aux_variables}",
              file=sys.stderr)
        return 2
    coeffs = [c.specialize({v: 1 for v in at_one})
              for c in series.expand(gf, args.terms)]
    if args.format == "json":
        payload = {
            "family": args.family,
            "k": args.k,
            "coefficients": [{"n": n, "terms": coeffs[n].to_json_terms()}
                             for n in range(1, args.terms + 1)],
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        print("n,coefficient")
        for n in range(1, args.terms + 1):
            print(f"{n},{coeffs[n].to_text()}")
    else:
        for n in range(1, args.terms + 1):
            print(coeffs[n].to_text())
    return 0


def cmd_verify(args) -> int:
    suites = (verify.FAMILIES + ("totals", "formulas", "reversal")
              if args.suite == "all" else (args.suite,))
    summary = verify.run_all(args.max_n, args.max_k, args.ham_cap, suites)
    if args.format == "json":
        print(json.dumps(verify.to_json_obj(summary)))
    elif args.format == "csv":
        print(verify.to_csv(summary))
    else:
        print(verify.to_text(summary))
    return 0 if summary.ok else 1


def cmd_asymptotics(args) -> int:
    ratio = formulas.empirical_degree_ratio(args.degree, args.n)
    limit = formulas.degree_proportion_limit(args.degree)
    gap = limit.gap_upper_bound(ratio)
    ratio_text = format_fraction(ratio, 10)
    limit_text = limit.decimal(10)
    gap_text = format_fraction(gap, 10)
    sign = "+" if limit.b >= 0 else "-"
    scale = "" if abs(limit.b) == 1 else f"{abs(limit.b)}*"
    limit_expr = f"({limit.a} {sign} {scale}sqrt(5))/{limit.c}"
    if args.format == "json":
        print(json.dumps({
            "degree": args.degree,
            "n": args.n,
            "ratio": {"numerator": str(ratio.numerator),
                      "denominator": str(ratio.denominator)},
            "ratio_decimal": ratio_text,
            "limit": limit_expr,
            "limit_decimal": limit_text,
            "gap_decimal": gap_text,
        }))
    elif args.format == "csv":
        print("degree,n,ratio,limit,gap")
        print(f"{args.degree},{args.n},{ratio_text},{limit_text},{gap_text}")
    else:
        print(f"ratio {ratio.numerator}/{ratio.denominator} = {ratio_text}")
        print(f"limit {limit_expr} = {limit_text}")
        print(f"|ratio - limit| <= {gap_text}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": cmd_count,
        "enumerate": cmd_enumerate,
        "series": cmd_series,
        "verify": cmd_verify,
        "asymptotics": cmd_asymptotics,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
