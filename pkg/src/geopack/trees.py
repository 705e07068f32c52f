"""Geodesic packing on trees: near-linear leaf-pair extraction.

Every maximal geodesic of a tree joins two leaves, and the packing number
can be computed by repeatedly suppressing degree-2 vertices, extracting one
leaf pair at an end support vertex, and deleting that vertex together with
all its leaves.  The recorded pairs are end-vertices of pairwise disjoint
maximal geodesics of the original tree.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import ContractViolation, DomainError
from .graphs import Graph
from .solvers import DEFAULT_LIMITS, SolveLimits, gpack_value, gt_value


@dataclass(frozen=True)
class LeafPairSet:
    """End-vertex pairs of the packed geodesics, sorted by first element.

    Pairs satisfy u < v except for the degenerate single-vertex witness
    (v, v) returned for a one-vertex tree.
    """

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


def is_tree(g: Graph) -> bool:
    """Connected and acyclic; the empty graph does not count."""
    if g.n == 0:
        return False
    if g.edge_count != g.n - 1:
        return False
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    return reached == g.n


def find_end_support_vertex(t: Graph) -> int:
    """Lowest-id support vertex with at most one non-leaf neighbour.

    Requires a tree on at least two vertices with no degree-2 vertices;
    every such tree has one.
    """
    if not is_tree(t) or t.n < 2:
        raise ContractViolation("end support lookup needs a tree on >= 2 vertices")
    if any(t.degree(v) == 2 for v in range(t.n)):
        raise ContractViolation("end support lookup needs a tree with no degree-2 vertices")
    for v in range(t.n):
        leaf_nbrs = sum(1 for w in t.adj[v] if t.degree(w) == 1)
        if leaf_nbrs >= 1 and t.degree(v) - leaf_nbrs <= 1:
            return v
    raise ContractViolation("no end support vertex found")


def gpack_tree(t: Graph) -> tuple[int, LeafPairSet]:
    """Geodesic packing number of a tree with a leaf-pair witness.

    The witness pairs use the original vertex ids: smoothing and deletions
    operate in place on the input ids, never relabelling.  End support
    vertices are consumed lowest-id first, fixing the witness
    deterministically.
    """
    if t.n == 0:
        return 0, LeafPairSet(())
    if not is_tree(t):
        raise DomainError("gpack_tree needs a tree")
    if t.n == 1:
        return 1, LeafPairSet(((0, 0),))

    adj: list[set[int]] = [set(nbrs) for nbrs in t.adj]
    alive = [True] * t.n
    alive_count = t.n
    candidates: list[int] = []

    def contract(v: int) -> tuple[int, int]:
        # Suppress a degree-2 vertex; in a tree its neighbours are never
        # adjacent, so the graph stays simple and degrees are preserved.
        nonlocal alive_count
        x, y = adj[v]
        if x in adj[y]:
            raise ContractViolation("contraction would create a parallel edge")
        adj[x].discard(v)
        adj[y].discard(v)
        adj[x].add(y)
        adj[y].add(x)
        adj[v].clear()
        alive[v] = False
        alive_count -= 1
        return x, y

    for v in range(t.n):
        if len(adj[v]) == 2:
            contract(v)

    def is_end_support(v: int) -> bool:
        if not alive[v] or not adj[v]:
            return False
        leaf_nbrs = sum(1 for w in adj[v] if len(adj[w]) == 1)
        return leaf_nbrs >= 1 and len(adj[v]) - leaf_nbrs <= 1

    for v in range(t.n):
        if alive[v]:
            heapq.heappush(candidates, v)

    pairs: list[tuple[int, int]] = []
    while alive_count >= 3:
        p = -1
        while candidates:
            cand = heapq.heappop(candidates)
            if is_end_support(cand):
                p = cand
                break
        if p < 0:
            # Lazy queue may have missed a status change; rebuild once.
            for v in range(t.n):
                if is_end_support(v):
                    heapq.heappush(candidates, v)
            if not candidates:
                raise ContractViolation("tree invariant broken: no end support vertex")
            continue
        leaves = sorted(w for w in adj[p] if len(adj[w]) == 1)
        pairs.append((leaves[0], leaves[1]))
        non_leaf = [w for w in adj[p] if len(adj[w]) > 1]
        for w in leaves:
            adj[w].clear()
            alive[w] = False
        adj[p].clear()
        alive[p] = False
        alive_count -= 1 + len(leaves)
        if non_leaf:
            w = non_leaf[0]
            adj[w].discard(p)
            if len(adj[w]) == 2:
                x, y = contract(w)
                heapq.heappush(candidates, x)
                heapq.heappush(candidates, y)
            elif len(adj[w]) == 1:
                heapq.heappush(candidates, next(iter(adj[w])))
                heapq.heappush(candidates, w)
            else:
                heapq.heappush(candidates, w)

    if alive_count == 2:
        a, b = sorted(v for v in range(t.n) if alive[v])
        pairs.append((a, b))

    pairs.sort()
    return len(pairs), LeafPairSet(tuple(pairs))


def verify_tree_equality(t: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> bool:
    """Tree algorithm vs. exact transversal, cross-checked against exact packing."""
    if not is_tree(t):
        raise DomainError("equality check needs a tree")
    value, _ = gpack_tree(t)
    return value == gt_value(t, limits) == gpack_value(t, limits)


def tree_pairs_to_json_dict(value: int, pairs: LeafPairSet) -> dict:
    return {"gpack": value, "pairs": [list(p) for p in pairs.pairs]}


# ---------------------------------------------------------------------------
# Tree generation (verification suites and tests)
# ---------------------------------------------------------------------------

def tree_from_pruefer(seq: Sequence[int], n: int) -> Graph:
    """Decode a Pruefer sequence of length n-2 over 0..n-1."""
    if n < 2:
        raise DomainError("Pruefer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise DomainError("Pruefer sequence must have length n - 2")
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, a), max(leaf, a)))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise DomainError("random tree needs n >= 1")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(seq, n)
