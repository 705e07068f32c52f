#!/usr/bin/env python3
"""Survey diagonal grids (strong products of paths).

For every dimension vector with product at most --max-vertices, compare the
solved packing number against the product of all dimensions but the
smallest, and record the orders of the maximal geodesics (always a subset
of the dimension set).

Usage:
    python scripts/grid_survey.py [--max-vertices 16] [--max-rank 3]
"""

from __future__ import annotations

import argparse
import math
from itertools import combinations_with_replacement

from geopack import diagonal_grid, enumerate_maximal_geodesics, gpack_value


def dimension_vectors(max_vertices: int, max_rank: int):
    for rank in range(2, max_rank + 1):
        for dims in combinations_with_replacement(range(2, max_vertices // 2 + 1), rank):
            if math.prod(dims) <= max_vertices:
                yield dims


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-vertices", type=int, default=16)
    parser.add_argument("--max-rank", type=int, default=3)
    args = parser.parse_args()

    print("dims            gpack  expected  geodesic orders")
    for dims in dimension_vectors(args.max_vertices, args.max_rank):
        g = diagonal_grid(dims)
        value = gpack_value(g)
        expected = math.prod(dims[1:])
        orders = sorted({len(p.vertices) for p in enumerate_maximal_geodesics(g).geodesics})
        flag = "" if value == expected else "  <-- MISMATCH"
        print(f"{str(dims):<15} {value:>5}  {expected:>8}  {orders}{flag}")


if __name__ == "__main__":
    main()
