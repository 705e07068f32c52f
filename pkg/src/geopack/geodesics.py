"""Distances, geodesic predicates, and exhaustive maximal-geodesic enumeration."""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ContractViolation, DomainError, EnumerationOverflow
from .graphs import Graph

DEFAULT_CAP = 100_000

INF = math.inf


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop distances; unreachable pairs hold ``math.inf``."""

    rows: tuple[tuple[float, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def dist(self, u: int, v: int) -> float:
        return self.rows[u][v]

    def is_connected(self) -> bool:
        return all(d < INF for row in self.rows for d in row)

    def diameter(self) -> int:
        """Largest distance; raises DomainError when disconnected or empty."""
        if self.n == 0:
            raise DomainError("diameter of the empty graph is undefined")
        worst = 0.0
        for row in self.rows:
            for d in row:
                if d == INF:
                    raise DomainError("diameter undefined for a disconnected graph")
                if d > worst:
                    worst = d
        return int(worst)


def all_pairs_distances(g: Graph) -> DistanceTable:
    """BFS from every vertex."""
    rows: list[tuple[float, ...]] = []
    for source in range(g.n):
        dist = [INF] * g.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in g.adj[u]:
                if dist[w] == INF:
                    dist[w] = du + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return DistanceTable(tuple(rows))


@dataclass(frozen=True)
class Geodesic:
    """A shortest path stored in canonical orientation (first id <= last id)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a geodesic has at least one vertex")
        if self.vertices[0] > self.vertices[-1]:
            raise ValueError("geodesic not in canonical orientation")

    @staticmethod
    def from_vertices(seq: Sequence[int]) -> Geodesic:
        verts = tuple(seq)
        if verts and verts[0] > verts[-1]:
            verts = verts[::-1]
        return Geodesic(verts)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class GeodesicCatalog:
    """Deduplicated maximal geodesics of one graph, sorted lexicographically.

    ``complete`` is False when enumeration stopped at ``cap`` entries, in
    which case the stored set is an arbitrary prefix of the full catalog.
    """

    geodesics: tuple[Geodesic, ...]
    complete: bool
    cap: int

    @property
    def count(self) -> int:
        return len(self.geodesics)


def is_geodesic(g: Graph, path: Sequence[int], table: DistanceTable | None = None) -> bool:
    """True iff ``path`` is a walk of distinct adjacent vertices of shortest length.

    Ill-formed sequences (repeats, non-adjacent steps, unknown ids) return
    False rather than raising.
    """
    verts = tuple(path)
    if not verts:
        return False
    if any(not (0 <= v < g.n) for v in verts):
        return False
    if len(set(verts)) != len(verts):
        return False
    for a, b in zip(verts, verts[1:]):
        if not g.has_edge(a, b):
            return False
    if table is None:
        table = all_pairs_distances(g)
    return len(verts) - 1 == table.dist(verts[0], verts[-1])


def _pair_is_maximal(g: Graph, table: DistanceTable, u: int, v: int) -> bool:
    # One-step extensions only involve the endpoints and the pair distance,
    # so maximality is shared by every geodesic between u and v.
    length = table.dist(u, v)
    for w in g.adj[u]:
        if table.dist(w, v) == length + 1:
            return False
    for w in g.adj[v]:
        if table.dist(u, w) == length + 1:
            return False
    return True


def is_maximal_geodesic(
    g: Graph,
    p: Geodesic | Sequence[int],
    table: DistanceTable | None = None,
) -> bool:
    """True iff no one-vertex extension of ``p`` at either end is a geodesic."""
    verts = tuple(p.vertices) if isinstance(p, Geodesic) else tuple(p)
    if table is None:
        table = all_pairs_distances(g)
    if not is_geodesic(g, verts, table):
        raise ContractViolation(f"sequence {verts!r} is not a geodesic")
    return _pair_is_maximal(g, table, verts[0], verts[-1])


def _geodesics_between(g: Graph, table: DistanceTable, u: int, v: int) -> Iterator[tuple[int, ...]]:
    """All u-v geodesics in lexicographic order, via the shortest-path DAG."""
    if u == v:
        yield (u,)
        return

    def successors(x: int) -> list[int]:
        remaining = table.dist(x, v)
        return [w for w in g.adj[x] if table.dist(w, v) == remaining - 1]

    path = [u]
    iters = [iter(successors(u))]
    while iters:
        w = next(iters[-1], None)
        if w is None:
            iters.pop()
            path.pop()
            continue
        if w == v:
            yield tuple(path) + (w,)
        else:
            path.append(w)
            iters.append(iter(successors(w)))


def enumerate_maximal_geodesics(g: Graph, cap: int = DEFAULT_CAP) -> GeodesicCatalog:
    """Enumerate every maximal geodesic of ``g``, up to ``cap`` entries.

    Vertex pairs are scanned in lexicographic order and the shortest-path
    DAG of each pair is walked lowest-successor-first, so the catalog is
    reproducible.  A pair (u, u) contributes the single-vertex geodesic
    exactly when u is isolated.  If the cap is hit the catalog is returned
    with ``complete=False``; callers that need exactness must treat that as
    an overflow.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    table = all_pairs_distances(g)
    found: list[Geodesic] = []
    complete = True
    for u in range(g.n):
        for v in range(u, g.n):
            if table.dist(u, v) == INF:
                continue
            if not _pair_is_maximal(g, table, u, v):
                continue
            for verts in _geodesics_between(g, table, u, v):
                if len(found) >= cap:
                    complete = False
                    break
                found.append(Geodesic(verts))
            if not complete:
                break
        if not complete:
            break
    found.sort(key=lambda p: p.vertices)
    return GeodesicCatalog(tuple(found), complete, cap)


def shortest_maximal_geodesic_length(catalog: GeodesicCatalog) -> int:
    """Minimum length over the full catalog."""
    if not catalog.complete:
        raise EnumerationOverflow("catalog is incomplete; raise the enumeration cap")
    if catalog.count == 0:
        raise DomainError("empty catalog has no shortest maximal geodesic")
    return min(p.length for p in catalog.geodesics)


def is_uniform_geodesic(g: Graph, catalog: GeodesicCatalog) -> bool:
    """True iff every maximal geodesic length equals the diameter."""
    table = all_pairs_distances(g)
    if g.n == 0 or not table.is_connected():
        raise DomainError("uniform-geodesic check needs a connected graph")
    if not catalog.complete:
        raise EnumerationOverflow("catalog is incomplete; raise the enumeration cap")
    diam = table.diameter()
    return all(p.length == diam for p in catalog.geodesics)


def catalog_to_json_dict(catalog: GeodesicCatalog) -> dict:
    return {
        "complete": catalog.complete,
        "count": catalog.count,
        "geodesics": [list(p.vertices) for p in catalog.geodesics],
    }


def catalog_to_json(catalog: GeodesicCatalog) -> str:
    return json.dumps(catalog_to_json_dict(catalog), indent=2)
