"""Command-line front end.

Verbs: solve, mis, bound, gen, selftest.  Exit codes: 0 success,
1 usage error, 2 DIMACS parse error, 3 cap/resource error, 4 property or
verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import chromatic, graph, mis, selftest
from .graph import CapExceeded, DimacsError, iter_vertices


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; our exit vocabulary reserves 2 for
    # parse errors, so route usage problems through our own handler.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="exactcolor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="chromatic number and optimal coloring of a DIMACS file")
    p_solve.add_argument("path")
    p_solve.add_argument("--print-coloring", action="store_true",
                         help="also print one 'v <vertex> <color>' line per vertex (1-based)")
    p_solve.add_argument("--max-n", type=int, default=chromatic.DP_CAP_DEFAULT,
                         help=f"DP vertex cap; raising past {chromatic.DP_CAP_DEFAULT} "
                              f"(up to {chromatic.DP_CAP_MAX}) acknowledges the 2**n-byte table")
    p_solve.add_argument("--json", action="store_true", help="emit a JSON run report")

    p_mis = sub.add_parser("mis", help="list maximal independent sets of size <= k")
    p_mis.add_argument("path")
    p_mis.add_argument("k", type=int)
    p_mis.add_argument("--raw", action="store_true",
                       help="stream generator output (may include non-maximal sets) instead of the maximal-only filter")
    p_mis.add_argument("--count-only", action="store_true", help="print only the number of sets")

    p_bound = sub.add_parser("bound", help="exact counting bound 3^(4k-n) * 4^(n-3k)")
    p_bound.add_argument("n", type=int)
    p_bound.add_argument("k", type=int)

    p_gen = sub.add_parser("gen", help="write a generated instance as DIMACS")
    p_gen.add_argument("spec", nargs="+",
                       help="triangles-k4s A B | gnp N P SEED | complete N | cycle N | petersen | groetzsch")
    p_gen.add_argument("-o", "--out", required=True, help="output path")

    p_self = sub.add_parser("selftest", help="run the randomized property suites")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--trials", type=int, default=25)

    return parser


def _load(path: str, cap: int = graph.VERTEX_CAP_DEFAULT) -> graph.Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph.from_dimacs(fh, cap=cap)


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.max_n > chromatic.DP_CAP_MAX:
        raise _UsageError(f"--max-n must be at most {chromatic.DP_CAP_MAX}")
    g = _load(args.path)
    t0 = time.perf_counter()
    chi, table = chromatic.chromatic_number(g, dp_cap=args.max_n)
    coloring = chromatic.extract_coloring(g, table)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    if not graph.is_proper_coloring(g, coloring) or coloring.num_colors != chi:
        print("error: extracted coloring failed verification", file=sys.stderr)
        return 4
    if args.json:
        report = {
            "instance": Path(args.path).name,
            "n": g.n,
            "m": g.m,
            "chi": chi,
            "wall_ms": round(wall_ms, 3),
            "recursive_calls": table.stats.recursive_calls,
            "emitted_sets": table.stats.emitted_sets,
            "table_bytes": len(table.entries),
            "colors": [c + 1 for c in coloring.colors] if args.print_coloring else None,
        }
        print(json.dumps(report))
    else:
        print(f"chi {chi}")
        if args.print_coloring:
            for v, c in enumerate(coloring.colors):
                print(f"v {v + 1} {c + 1}")
    return 0


def _format_set(mask: int) -> str:
    return " ".join(str(v + 1) for v in iter_vertices(mask))


def _cmd_mis(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise _UsageError("k must be nonnegative")
    g = _load(args.path)
    if args.raw:
        emitted: list[int] = []
        mis.small_mis(g, g.full_mask, args.k, emitted.append)
        if args.count_only:
            print(len(emitted))
        else:
            for m in emitted:
                print(_format_set(m))
    else:
        sets = mis.small_mis_filtered(g, g.full_mask, args.k)
        if args.count_only:
            print(len(sets))
        else:
            for m in sorted(sets):
                print(_format_set(m))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.n < 0 or args.k < 0:
        raise _UsageError("n and k must be nonnegative")
    value: Fraction = mis.mis_bound(args.n, args.k)
    print(value if value.denominator == 1 else f"{value.numerator}/{value.denominator}")
    print(f"~ {float(value):.6g}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    kind, *params = args.spec
    try:
        if kind == "triangles-k4s":
            a, b = map(int, params)
            g = graph.gen_triangles_k4s(a, b)
        elif kind == "gnp":
            n, p, seed = int(params[0]), float(params[1]), int(params[2])
            g = graph.gen_gnp(n, p, seed)
        elif kind == "complete":
            (n,) = map(int, params)
            g = graph.gen_complete(n)
        elif kind == "cycle":
            (n,) = map(int, params)
            g = graph.gen_cycle(n)
        elif kind in ("petersen", "groetzsch"):
            if params:
                raise _UsageError(f"{kind} takes no parameters")
            g = graph.gen_named(kind)
        else:
            raise _UsageError(f"unknown generator {kind!r}")
    except (ValueError, TypeError, IndexError) as exc:
        raise _UsageError(f"bad generator spec: {exc}") from None
    Path(args.out).write_text(graph.to_dimacs(g), encoding="utf-8")
    print(f"wrote {args.out} (n={g.n}, m={g.m})")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    if args.trials < 0:
        raise _UsageError("trials must be nonnegative")
    report = selftest.run_selftest(seed=args.seed, trials=args.trials)
    print(selftest.format_report(report))
    return 0 if report.ok else 4


_DISPATCH = {
    "solve": _cmd_solve,
    "mis": _cmd_mis,
    "bound": _cmd_bound,
    "gen": _cmd_gen,
    "selftest": _cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except DimacsError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
