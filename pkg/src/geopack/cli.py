"""Command-line interface.

Subcommands: compute, enumerate, generate, verify, ratio, tree.  Exit codes:
0 success, 1 verification failure, 2 input error, 3 budget exceeded.
JSON output is byte-deterministic for a fixed input and seed (timings are
suppressed there; text mode reports them).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import BudgetExceeded, DomainError, ParseError, SpecError
from .geodesics import catalog_to_json_dict, enumerate_maximal_geodesics
from .graphs import (
    Graph,
    generate,
    graph_to_edge_list,
    graph_to_json_dict,
    parse_edge_list,
    parse_family,
)
from .solvers import (
    SolveLimits,
    gpack_report,
    gt_report,
    solve_result_to_json_dict,
)
from .trees import gpack_tree, tree_pairs_to_json_dict
from .verify import SUITE_NAMES, rook_ratio_curve, run_suite


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--file", help="edge-list file ('-' reads stdin)")
    group.add_argument("--family", help="family spec, e.g. complete:6 or strong(path:3,path:4)")


def _add_limit_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cap", type=int, default=100_000, help="maximal-geodesic enumeration cap")
    parser.add_argument("--time-budget", type=float, default=60.0, help="solver time budget in seconds")
    parser.add_argument("--node-budget", type=int, default=10_000_000, help="solver search-node budget")
    parser.add_argument(
        "--parallel",
        action="store_true",
        help="allow concurrent branch exploration (values are identical; currently runs the sequential engine)",
    )


def _limits(args: argparse.Namespace) -> SolveLimits:
    return SolveLimits(
        max_geodesics=args.cap,
        time_budget=args.time_budget,
        node_budget=args.node_budget,
    )


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.family is not None:
        return generate(parse_family(args.family))
    if args.file == "-":
        return parse_edge_list(sys.stdin.read())
    with open(args.file, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def _frac_str(f: Fraction) -> str:
    return str(f)


def cmd_compute(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    limits = _limits(args)
    wanted = ["gpack", "gt"] if args.invariant == "both" else [args.invariant]
    docs = []
    for invariant in wanted:
        result = gpack_report(g, limits) if invariant == "gpack" else gt_report(g, limits)
        docs.append((invariant, result))
    if args.format == "json":
        payload = [solve_result_to_json_dict(inv, res) for inv, res in docs]
        _emit_json(payload[0] if len(payload) == 1 else payload)
        return 0
    for invariant, result in docs:
        print(f"{invariant} = {result.value} (exact; nodes={result.stats.nodes}, millis={result.stats.millis})")
        if invariant == "gpack":
            for p in result.witness.geodesics:  # type: ignore[union-attr]
                print("  geodesic:", " ".join(map(str, p.vertices)))
        else:
            print("  vertices:", " ".join(map(str, result.witness.vertices)))  # type: ignore[union-attr]
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    catalog = enumerate_maximal_geodesics(g, cap=args.cap)
    if args.format == "json":
        _emit_json(catalog_to_json_dict(catalog))
    else:
        for p in catalog.geodesics:
            print(" ".join(map(str, p.vertices)))
        print(f"# count={catalog.count} complete={str(catalog.complete).lower()}")
    return 0 if catalog.complete else 3


def cmd_generate(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.format == "json":
        _emit_json(graph_to_json_dict(g))
    else:
        sys.stdout.write(graph_to_edge_list(g))
    return 0


def cmd_tree(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    value, pairs = gpack_tree(g)
    if args.format == "json":
        _emit_json(tree_pairs_to_json_dict(value, pairs))
    else:
        print(f"gpack = {value}")
        for u, v in pairs.pairs:
            print(f"  pair: {u} {v}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    limits = _limits(args)
    results = run_suite(
        args.suite, size=args.n, count=args.count, seed=args.seed, limits=limits
    )
    failures = 0
    inconclusive = 0
    for item in results:
        if item.passed is None:
            inconclusive += 1
            print(f"INCONCLUSIVE {item.label}: {item.detail}")
        elif item.passed:
            print(f"PASS {item.label}")
        else:
            failures += 1
            print(f"FAIL {item.label}: {item.detail}")
    passed = sum(1 for item in results if item.passed)
    print(f"# {passed}/{len(results)} passed")
    if inconclusive:
        return 3
    return 0 if failures == 0 else 1


_RATIO_FAMILIES = ("rook", "complete", "complete_bipartite")


def cmd_ratio(args: argparse.Namespace) -> int:
    from .graphs import complete_bipartite_graph, complete_graph, rook_graph
    from .solvers import gpack_value, gt_value

    limits = _limits(args)
    rows = []
    for n in range(args.min, args.max + 1):
        if n < 2:
            raise DomainError("ratio table needs n >= 2")
        if args.family == "rook":
            g = rook_graph(n)
        elif args.family == "complete":
            g = complete_graph(n)
        else:
            g = complete_bipartite_graph(n, n)
        gp = gpack_value(g, limits)
        gt = gt_value(g, limits)
        row = {
            "n": n,
            "gpack": gp,
            "gt": gt,
            "ratio": _frac_str(Fraction(gt, gp)),
        }
        if args.family == "rook":
            row["curve"] = _frac_str(rook_ratio_curve(n))
        rows.append(row)
    if args.format == "json":
        _emit_json({"family": args.family, "rows": rows})
        return 0
    headers = list(rows[0].keys())
    widths = {h: max(len(h), max(len(str(r[h])) for r in rows)) for h in headers}
    print("  ".join(h.ljust(widths[h]) for h in headers))
    for r in rows:
        print("  ".join(str(r[h]).ljust(widths[h]) for h in headers))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geopack",
        description="Exact geodesic packing (gpack) and geodesic transversal (gt) toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute gpack and/or gt of a graph")
    _add_input_options(p)
    p.add_argument("--invariant", choices=("gpack", "gt", "both"), default="both")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_limit_options(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", help="list every maximal geodesic")
    _add_input_options(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="emit a named family as an edge list or JSON")
    _add_input_options(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("tree", help="tree packing number with leaf-pair witness")
    _add_input_options(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="run a built-in verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--n", type=int, default=12, help="input size for randomized suites")
    p.add_argument("--count", type=int, default=25, help="number of random inputs")
    p.add_argument("--seed", type=int, default=0)
    _add_limit_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ratio", help="gt/gpack ratio table for a family range")
    p.add_argument("family", choices=_RATIO_FAMILIES)
    p.add_argument("--min", type=int, default=2)
    p.add_argument("--max", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_limit_options(p)
    p.set_defaults(func=cmd_ratio)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        bounds = ""
        if exc.lower is not None or exc.upper is not None:
            bounds = f" (bounds: lower={exc.lower}, upper={exc.upper})"
        print(f"budget exceeded: {exc}{bounds}", file=sys.stderr)
        return 3
    except (ParseError, SpecError, DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
