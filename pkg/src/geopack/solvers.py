"""Exact solvers for geodesic packing (gpack) and geodesic transversal (gt).

gpack is solved as a maximum independent set on the conflict graph of the
maximal-geodesic catalog; gt as a minimum hitting set over the same catalog.
Both use deterministic branch and bound over bitmasks, and both report a
lexicographically least optimal witness so outputs are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    BudgetExceeded,
    ContractViolation,
    DomainError,
    EnumerationOverflow,
)
from .geodesics import Geodesic, GeodesicCatalog, enumerate_maximal_geodesics
from .graphs import Graph, derived_graph


@dataclass(frozen=True)
class SolveLimits:
    """Resource ceilings for the exact solvers."""

    max_geodesics: int = 100_000
    time_budget: float = 60.0
    node_budget: int = 10_000_000

    def __post_init__(self) -> None:
        if self.max_geodesics < 1 or self.time_budget <= 0 or self.node_budget < 1:
            raise ValueError("solve limits must be positive")


DEFAULT_LIMITS = SolveLimits()


@dataclass(frozen=True)
class Packing:
    """Pairwise vertex-disjoint maximal geodesics witnessing a gpack lower bound."""

    geodesics: tuple[Geodesic, ...]

    @property
    def size(self) -> int:
        return len(self.geodesics)


@dataclass(frozen=True)
class Transversal:
    """A vertex set hitting every maximal geodesic, as a sorted tuple."""

    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ConflictGraph:
    """Intersection graph of catalog entries; gpack is its maximum independent set."""

    node_count: int
    edges: tuple[tuple[int, int], ...]


class SolveStats(NamedTuple):
    nodes: int
    millis: int


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Packing | Transversal | None
    stats: SolveStats


class DualityReport(NamedTuple):
    gpack: int
    gt: int
    ratio: Fraction


class _Budget:
    """Shared node/time accounting for one solve, including witness extraction."""

    __slots__ = ("node_budget", "deadline", "nodes")

    def __init__(self, limits: SolveLimits) -> None:
        self.node_budget = limits.node_budget
        self.deadline = time.monotonic() + limits.time_budget
        self.nodes = 0

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded("search node budget exhausted", nodes=self.nodes)
        if self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted", nodes=self.nodes)


def _vertex_masks(geodesics: Sequence[Geodesic]) -> list[int]:
    masks = []
    for p in geodesics:
        m = 0
        for v in p.vertices:
            m |= 1 << v
        masks.append(m)
    return masks


def _cover_masks(geodesics: Sequence[Geodesic], n: int) -> list[int]:
    covers = [0] * n
    for j, p in enumerate(geodesics):
        bit = 1 << j
        for v in p.vertices:
            covers[v] |= bit
    return covers


def _conflict_masks(geodesics: Sequence[Geodesic], covers: Sequence[int]) -> list[int]:
    nbr = []
    for i, p in enumerate(geodesics):
        m = 0
        for v in p.vertices:
            m |= covers[v]
        nbr.append(m & ~(1 << i))
    return nbr


def conflict_graph(catalog: GeodesicCatalog) -> ConflictGraph:
    """Materialize the intersection graph of a complete catalog."""
    if not catalog.complete:
        raise EnumerationOverflow("conflict graph needs a complete catalog")
    geos = catalog.geodesics
    vmasks = _vertex_masks(geos)
    edges = [
        (i, j)
        for i in range(len(geos))
        for j in range(i + 1, len(geos))
        if vmasks[i] & vmasks[j]
    ]
    return ConflictGraph(len(geos), tuple(edges))


# ---------------------------------------------------------------------------
# Maximum independent set engine (gpack, induced P3 packing)
# ---------------------------------------------------------------------------

def _greedy_independent(nbr: Sequence[int], m: int) -> int:
    chosen = 0
    blocked = 0
    for i in range(m):
        bit = 1 << i
        if blocked & bit:
            continue
        chosen |= bit
        blocked |= bit | nbr[i]
    return chosen


def _clique_cover_bound(cand: int, nbr: Sequence[int]) -> int:
    # Greedily partition the candidates into cliques; an independent set can
    # use at most one vertex per clique.
    bound = 0
    rest = cand
    while rest:
        v = (rest & -rest).bit_length() - 1
        clique = 1 << v
        common = nbr[v] & rest
        while common:
            u = (common & -common).bit_length() - 1
            clique |= 1 << u
            common &= nbr[u]
        rest &= ~clique
        bound += 1
    return bound


def _vertex_budget_bound(cand: int, vmasks: Sequence[int], min_size: int) -> int:
    # Every candidate occupies at least min_size graph vertices of the
    # candidates' union, so the union caps any packing inside cand.
    union = 0
    c = cand
    while c:
        i = (c & -c).bit_length() - 1
        union |= vmasks[i]
        c &= c - 1
    return union.bit_count() // min_size


def _pick_mis_vertex(cand: int, nbr: Sequence[int]) -> int:
    best_v = -1
    best_deg = -1
    c = cand
    while c:
        v = (c & -c).bit_length() - 1
        deg = (nbr[v] & cand).bit_count()
        if deg > best_deg:
            best_deg, best_v = deg, v
        c &= c - 1
    return best_v


def _mis_max(
    nbr: Sequence[int],
    vmasks: Sequence[int],
    min_size: int,
    m: int,
    hard_ub: int,
    budget: _Budget,
) -> int:
    best = _greedy_independent(nbr, m).bit_count()
    if best >= hard_ub:
        return best
    stack = [((1 << m) - 1, 0)]
    while stack:
        cand, size = stack.pop()
        budget.spend()
        if size > best:
            best = size
            if best >= hard_ub:
                break
        if not cand:
            continue
        slack = best - size
        if cand.bit_count() <= slack:
            continue
        bound = min(
            _clique_cover_bound(cand, nbr),
            _vertex_budget_bound(cand, vmasks, min_size),
        )
        if size + bound <= best:
            continue
        v = _pick_mis_vertex(cand, nbr)
        bit = 1 << v
        stack.append((cand & ~bit, size))
        stack.append((cand & ~(nbr[v] | bit), size + 1))
    return best


def _mis_feasible(
    nbr: Sequence[int],
    vmasks: Sequence[int],
    min_size: int,
    cand: int,
    need: int,
    budget: _Budget,
) -> bool:
    if need <= 0:
        return True
    stack = [(cand, 0)]
    while stack:
        cand, size = stack.pop()
        budget.spend()
        if size >= need:
            return True
        if not cand:
            continue
        bound = min(
            cand.bit_count(),
            _clique_cover_bound(cand, nbr),
            _vertex_budget_bound(cand, vmasks, min_size),
        )
        if size + bound < need:
            continue
        v = _pick_mis_vertex(cand, nbr)
        bit = 1 << v
        stack.append((cand & ~bit, size))
        stack.append((cand & ~(nbr[v] | bit), size + 1))
    return False


def _mis_lex_witness(
    nbr: Sequence[int],
    vmasks: Sequence[int],
    min_size: int,
    m: int,
    k: int,
    budget: _Budget,
) -> list[int]:
    # Greedy left-to-right commit; feasibility of each prefix is decided
    # exactly, so the result is the lexicographically least optimal set.
    chosen: list[int] = []
    cand = (1 << m) - 1
    need = k
    while need:
        c = cand
        committed = False
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            rest = cand & ~nbr[v] & ~((1 << (v + 1)) - 1)
            if _mis_feasible(nbr, vmasks, min_size, rest, need - 1, budget):
                chosen.append(v)
                cand = rest
                need -= 1
                committed = True
                break
        if not committed:
            raise ContractViolation("witness extraction failed to match the optimum")
    return chosen


def _catalog_for(g: Graph, limits: SolveLimits, catalog: GeodesicCatalog | None) -> GeodesicCatalog:
    if catalog is None:
        catalog = enumerate_maximal_geodesics(g, cap=limits.max_geodesics)
    if not catalog.complete:
        raise EnumerationOverflow(
            f"maximal-geodesic catalog exceeded {catalog.cap} entries",
            lower=0,
            upper=g.n,
        )
    return catalog


def _stats(budget: _Budget, started: float) -> SolveStats:
    return SolveStats(budget.nodes, int((time.monotonic() - started) * 1000))


def _solve_gpack(
    g: Graph,
    limits: SolveLimits,
    *,
    catalog: GeodesicCatalog | None = None,
    want_witness: bool = True,
) -> SolveResult:
    started = time.monotonic()
    budget = _Budget(limits)
    catalog = _catalog_for(g, limits, catalog)
    geos = catalog.geodesics
    m = len(geos)
    if m == 0:
        return SolveResult(0, Packing(()) if want_witness else None, _stats(budget, started))
    vmasks = _vertex_masks(geos)
    covers = _cover_masks(geos, g.n)
    nbr = _conflict_masks(geos, covers)
    min_size = min(len(p.vertices) for p in geos)
    hard_ub = g.n // min_size
    try:
        value = _mis_max(nbr, vmasks, min_size, m, hard_ub, budget)
        witness = None
        if want_witness:
            idxs = _mis_lex_witness(nbr, vmasks, min_size, m, value, budget)
            witness = Packing(tuple(geos[i] for i in idxs))
    except BudgetExceeded as exc:
        raise BudgetExceeded(
            f"gpack search stopped: {exc}",
            lower=_greedy_independent(nbr, m).bit_count(),
            upper=hard_ub,
            nodes=budget.nodes,
        ) from None
    return SolveResult(value, witness, _stats(budget, started))


def gpack_exact(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> tuple[int, Packing]:
    """Exact geodesic packing number with a lexicographically least witness."""
    result = _solve_gpack(g, limits, want_witness=True)
    assert isinstance(result.witness, Packing)
    return result.value, result.witness


def gpack_value(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> int:
    """Exact gpack value without witness extraction (faster for sweeps)."""
    return _solve_gpack(g, limits, want_witness=False).value


def gpack_report(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> SolveResult:
    return _solve_gpack(g, limits, want_witness=True)


# ---------------------------------------------------------------------------
# Minimum hitting set engine (gt)
# ---------------------------------------------------------------------------

def _greedy_disjoint(uncovered: int, order_by_size: Sequence[int], vmasks: Sequence[int]) -> int:
    # Pairwise disjoint geodesics each need a private transversal vertex;
    # this is the structural gpack <= gt lower bound.
    used = 0
    count = 0
    for j in order_by_size:
        if (uncovered >> j) & 1 and not (vmasks[j] & used):
            used |= vmasks[j]
            count += 1
    return count


def _pick_uncovered_geodesic(
    uncovered: int,
    forbidden: int,
    geos: Sequence[Geodesic],
) -> tuple[int, list[int]]:
    best_j = -1
    best_allowed: list[int] = []
    best_count = -1
    c = uncovered
    while c:
        j = (c & -c).bit_length() - 1
        c &= c - 1
        allowed = [v for v in geos[j].vertices if not (forbidden >> v) & 1]
        if best_count < 0 or len(allowed) < best_count:
            best_count = len(allowed)
            best_j = j
            best_allowed = allowed
            if best_count <= 1:
                break
    return best_j, best_allowed


def _hs_search(
    start_uncovered: int,
    base_forbidden: int,
    best: int,
    geos: Sequence[Geodesic],
    covers: Sequence[int],
    vmasks: Sequence[int],
    order_by_size: Sequence[int],
    budget: _Budget,
) -> int:
    """Improve ``best`` (a known achievable size) to the true minimum."""
    stack = [(start_uncovered, base_forbidden, 0)]
    while stack:
        uncovered, forbidden, count = stack.pop()
        budget.spend()
        if not uncovered:
            if count < best:
                best = count
            continue
        if count + _greedy_disjoint(uncovered, order_by_size, vmasks) >= best:
            continue
        _, allowed = _pick_uncovered_geodesic(uncovered, forbidden, geos)
        if not allowed:
            continue
        # Partition by the first allowed vertex the solution uses.
        acc = forbidden
        pending = []
        for v in allowed:
            pending.append((uncovered & ~covers[v], acc, count + 1))
            acc |= 1 << v
        stack.extend(reversed(pending))
    return best


def _hs_feasible(
    start_uncovered: int,
    limit: int,
    min_vertex: int,
    geos: Sequence[Geodesic],
    covers: Sequence[int],
    vmasks: Sequence[int],
    order_by_size: Sequence[int],
    budget: _Budget,
) -> bool:
    """Does a hitting set of size <= limit exist using vertices >= min_vertex?"""
    if not start_uncovered:
        return True
    if limit <= 0:
        return False
    base_forbidden = (1 << min_vertex) - 1
    stack = [(start_uncovered, base_forbidden, 0)]
    while stack:
        uncovered, forbidden, count = stack.pop()
        budget.spend()
        if not uncovered:
            return True
        if count + _greedy_disjoint(uncovered, order_by_size, vmasks) > limit:
            continue
        _, allowed = _pick_uncovered_geodesic(uncovered, forbidden, geos)
        if not allowed:
            continue
        acc = forbidden
        pending = []
        for v in allowed:
            pending.append((uncovered & ~covers[v], acc, count + 1))
            acc |= 1 << v
        stack.extend(reversed(pending))
    return False


def _solve_gt(
    g: Graph,
    limits: SolveLimits,
    *,
    catalog: GeodesicCatalog | None = None,
    want_witness: bool = True,
) -> SolveResult:
    started = time.monotonic()
    budget = _Budget(limits)
    catalog = _catalog_for(g, limits, catalog)
    geos = catalog.geodesics
    m = len(geos)
    if m == 0:
        return SolveResult(0, Transversal(()) if want_witness else None, _stats(budget, started))
    vmasks = _vertex_masks(geos)
    covers = _cover_masks(geos, g.n)
    order_by_size = sorted(range(m), key=lambda j: (len(geos[j].vertices), j))
    all_mask = (1 << m) - 1

    # Greedy cover seeds the upper bound.
    uncovered = all_mask
    greedy_size = 0
    while uncovered:
        best_v, best_c = -1, 0
        for v in range(g.n):
            c = (covers[v] & uncovered).bit_count()
            if c > best_c:
                best_c, best_v = c, v
        uncovered &= ~covers[best_v]
        greedy_size += 1

    root_lb = _greedy_disjoint(all_mask, order_by_size, vmasks)
    try:
        value = greedy_size
        if root_lb < value:
            value = _hs_search(
                all_mask, 0, value, geos, covers, vmasks, order_by_size, budget
            )
        witness = None
        if want_witness:
            chosen: list[int] = []
            uncovered = all_mask
            v = 0
            while uncovered:
                if v >= g.n:
                    raise ContractViolation("witness extraction failed to match the optimum")
                if covers[v] & uncovered:
                    rest = uncovered & ~covers[v]
                    if _hs_feasible(
                        rest,
                        value - len(chosen) - 1,
                        v + 1,
                        geos,
                        covers,
                        vmasks,
                        order_by_size,
                        budget,
                    ):
                        chosen.append(v)
                        uncovered = rest
                v += 1
            witness = Transversal(tuple(chosen))
    except BudgetExceeded as exc:
        raise BudgetExceeded(
            f"gt search stopped: {exc}",
            lower=root_lb,
            upper=greedy_size,
            nodes=budget.nodes,
        ) from None
    return SolveResult(value, witness, _stats(budget, started))


def gt_exact(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> tuple[int, Transversal]:
    """Exact geodesic transversal number with a lexicographically least witness."""
    result = _solve_gt(g, limits, want_witness=True)
    assert isinstance(result.witness, Transversal)
    return result.value, result.witness


def gt_value(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> int:
    """Exact gt value without witness extraction (faster for sweeps)."""
    return _solve_gt(g, limits, want_witness=False).value


def gt_report(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> SolveResult:
    return _solve_gt(g, limits, want_witness=True)


# ---------------------------------------------------------------------------
# Derived quantities
# ---------------------------------------------------------------------------

def gpack_upper_bound(g: Graph, catalog: GeodesicCatalog) -> int:
    """floor(n / (d + 1)) where d is the shortest maximal geodesic length."""
    if not catalog.complete:
        raise EnumerationOverflow("upper bound needs a complete catalog")
    if catalog.count == 0:
        raise DomainError("upper bound undefined for an empty catalog")
    min_size = min(len(p.vertices) for p in catalog.geodesics)
    return g.n // min_size


def duality_check(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> DualityReport:
    """Both invariants plus the exact rational gt/gpack."""
    catalog = _catalog_for(g, limits, None)
    gpack = _solve_gpack(g, limits, catalog=catalog, want_witness=False).value
    gt = _solve_gt(g, limits, catalog=catalog, want_witness=False).value
    if gpack > gt:
        raise ContractViolation(f"solver bug: gpack {gpack} exceeds gt {gt}")
    if gpack == 0:
        raise DomainError("gt/gpack ratio undefined for the empty graph")
    return DualityReport(gpack, gt, Fraction(gt, gpack))


def _induced_p3_paths(g: Graph) -> list[tuple[int, int, int]]:
    paths = []
    for mid in range(g.n):
        nbrs = g.adj[mid]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                a, c = nbrs[i], nbrs[j]
                if not g.has_edge(a, c):
                    paths.append((a, mid, c))
    return paths


def induced_p3_packing_exact(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> int:
    """Maximum number of vertex-disjoint induced three-vertex paths."""
    started = time.monotonic()
    budget = _Budget(limits)
    paths = _induced_p3_paths(g)
    m = len(paths)
    if m == 0:
        return 0
    vmasks = []
    covers = [0] * g.n
    for j, (a, b, c) in enumerate(paths):
        vmasks.append((1 << a) | (1 << b) | (1 << c))
        covers[a] |= 1 << j
        covers[b] |= 1 << j
        covers[c] |= 1 << j
    nbr = [
        (covers[a] | covers[b] | covers[c]) & ~(1 << j)
        for j, (a, b, c) in enumerate(paths)
    ]
    try:
        return _mis_max(nbr, vmasks, 3, m, g.n // 3, budget)
    except BudgetExceeded as exc:
        raise BudgetExceeded(
            f"induced P3 packing stopped: {exc}",
            lower=_greedy_independent(nbr, m).bit_count(),
            upper=g.n // 3,
            nodes=budget.nodes,
        ) from None


def verify_np_reduction(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> bool:
    """Check gpack(derived(g)) == 1 + induced-P3-packing(g).

    Also asserts that every maximal geodesic of the derived graph has
    length 2; graphs containing an edge whose endpoints dominate each
    other's neighbourhoods violate that property (the edge survives as a
    length-1 maximal geodesic) and raise ContractViolation.
    """
    if g.n == 0:
        raise DomainError("reduction needs a nonempty graph")
    gp = derived_graph(g)
    catalog = _catalog_for(gp, limits, None)
    for p in catalog.geodesics:
        if p.length != 2:
            raise ContractViolation(
                f"derived graph has a maximal geodesic of length {p.length}: {p.vertices}"
            )
    lhs = _solve_gpack(gp, limits, catalog=catalog, want_witness=False).value
    rhs = 1 + induced_p3_packing_exact(g, limits)
    return lhs == rhs


def solve_result_to_json_dict(invariant: str, result: SolveResult) -> dict:
    """Result JSON with a fixed key order; millis is zeroed for reproducibility."""
    witness: list
    if isinstance(result.witness, Packing):
        witness = [list(p.vertices) for p in result.witness.geodesics]
    elif isinstance(result.witness, Transversal):
        witness = list(result.witness.vertices)
    else:
        witness = []
    return {
        "invariant": invariant,
        "value": result.value,
        "exact": True,
        "witness": witness,
        "bounds": {"lower": result.value, "upper": result.value},
        "stats": {"nodes": result.stats.nodes, "millis": 0},
    }
