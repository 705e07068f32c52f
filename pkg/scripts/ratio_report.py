#!/usr/bin/env python3
"""Sweep the gt/gpack ratio across the closed-form families.

Complete graphs push the ratio towards 2; rook graphs push it towards 3
(their ratio dominates the curve 3(1 - 2/n + 2/n^2)).  Whether the ratio is
bounded over all graphs is open, so this script only reports observations.

Usage:
    python scripts/ratio_report.py [--rook-max 4] [--complete-max 8] [--bipartite-max 4]
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from geopack import (
    SolveLimits,
    complete_bipartite_graph,
    complete_graph,
    duality_check,
    rook_graph,
)
from geopack.verify import rook_ratio_curve


def sweep(name, build, upper, limits, curve=None):
    print(f"\n{name}")
    header = "  n  gpack  gt   gt/gpack"
    if curve:
        header += "   curve"
    print(header)
    for n in range(2, upper + 1):
        report = duality_check(build(n), limits)
        ratio = Fraction(report.gt, report.gpack)
        line = f"  {n}  {report.gpack:>5}  {report.gt:>3}  {str(ratio):>8}"
        if curve:
            line += f"  {str(curve(n)):>7}"
        print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rook-max", type=int, default=4)
    parser.add_argument("--complete-max", type=int, default=8)
    parser.add_argument("--bipartite-max", type=int, default=4)
    parser.add_argument("--time-budget", type=float, default=120.0)
    args = parser.parse_args()
    limits = SolveLimits(time_budget=args.time_budget)

    sweep("rook graphs K_n x K_n", rook_graph, args.rook_max, limits, curve=rook_ratio_curve)
    sweep("complete graphs K_n", complete_graph, args.complete_max, limits)
    sweep(
        "balanced bipartite K_{n,n}",
        lambda n: complete_bipartite_graph(n, n),
        args.bipartite_max,
        limits,
    )


if __name__ == "__main__":
    main()
