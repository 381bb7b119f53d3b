"""Structural predicates and the class report that drives colorer dispatch."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Optional

from .errors import InputError
from .graph import Multigraph
from .outerplanar import outer_embedding

PATTERNS = ("k4", "k4me", "claw")


@dataclass(frozen=True)
class ClassReport:
    is_tree: bool
    is_subcubic: bool
    is_cubic: bool
    is_claw_free: bool
    is_2_degenerate: bool
    is_k4_free: bool
    is_k4_minus_e_free: bool
    is_series_parallel_subcubic: bool
    is_outerplanar: Optional[bool]
    max_degree: int

    def as_dict(self) -> dict:
        return asdict(self)


def is_tree(g: Multigraph) -> bool:
    return g.vertex_count >= 1 and g.is_simple() and g.edge_count == g.vertex_count - 1 and g.is_connected()


def is_forest(g: Multigraph) -> bool:
    return g.is_simple() and g.edge_count == g.vertex_count - len(g.components())


def has_claw(g: Multigraph) -> bool:
    """Induced K_{1,3}: a vertex with three pairwise non-adjacent neighbors."""
    for v in g.vertices:
        for a, b, c in combinations(sorted(g.neighbors(v)), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return True
    return False


def has_k4(g: Multigraph) -> bool:
    for u in g.vertices:
        nu = sorted(w for w in g.neighbors(u) if w > u)
        for a, b, c in combinations(nu, 3):
            if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
                return True
    return False


def has_k4_minus_e(g: Multigraph) -> bool:
    """K4 - e as a (not necessarily induced) subgraph: an edge with two common neighbors."""
    for e in g.edges:
        u, v = g.endpoints(e)
        if len((g.neighbors(u) & g.neighbors(v)) - {u, v}) >= 2:
            return True
    return False


def contains_subgraph(g: Multigraph, pattern: str) -> bool:
    if pattern == "k4":
        return has_k4(g)
    if pattern in ("k4me", "k4-e", "k4_minus_e"):
        return has_k4_minus_e(g)
    if pattern in ("claw", "claw-induced"):
        return has_claw(g)
    raise InputError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")


def is_2_degenerate(g: Multigraph) -> bool:
    return degeneracy_order(g, 2) is not None


def degeneracy_order(g: Multigraph, d: int) -> Optional[list[int]]:
    """Removal order taking a vertex of degree <= d each time, lowest id first."""
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    order = []
    while alive:
        cand = [v for v in alive if deg[v] <= d]
        if not cand:
            return None
        v = min(cand)
        order.append(v)
        alive.discard(v)
        for e in g.incident(v):
            w = g.other_end(e, v)
            if w in alive:
                deg[w] -= 1
    return order


# -- series-parallel reduction --------------------------------------------


@dataclass(frozen=True)
class SeriesStep:
    """Vertex x (edges e_ux, e_xv) was suppressed into the new edge e_uv."""

    x: int
    u: int
    v: int
    e_ux: int
    e_xv: int
    e_uv: int


@dataclass(frozen=True)
class ParallelStep:
    """Edge e between u and v was deleted (it had a parallel twin)."""

    e: int
    u: int
    v: int


@dataclass(frozen=True)
class SPReduction:
    base: tuple[int, int, int, int]  # (u, v, e1, e2): the final digon
    steps: tuple  # reduction order; replay reversed to build the graph


def series_parallel_reduction(g: Multigraph) -> Optional[SPReduction]:
    """Reduce a subcubic multigraph to a digon, or return ``None``.

    Degree-2 vertices with two distinct neighbors are suppressed first
    (lowest id), otherwise the lowest-id edge with a lower-id parallel twin is
    deleted.
    """
    active = [v for v in g.vertices if g.degree(v) > 0]
    if len(active) != g.vertex_count or g.vertex_count < 2:
        return None
    if g.max_degree() > 3 or g.min_degree() < 2 or not g.is_connected():
        return None
    ends = {e: g.endpoints(e) for e in g.edges}
    inc = {v: set(g.incident(v)) for v in g.vertices}
    next_id = max(ends) + 1
    steps = []

    def other(e, v):
        a, b = ends[e]
        return b if a == v else a

    while True:
        if len(inc) == 2 and len(ends) == 2:
            u, v = sorted(inc)
            e1, e2 = sorted(ends)
            return SPReduction((u, v, e1, e2), tuple(steps))
        progressed = False
        if len(inc) > 2:
            for x in sorted(inc):
                if len(inc[x]) != 2:
                    continue
                e1, e2 = sorted(inc[x])
                u, v = other(e1, x), other(e2, x)
                if u == v:
                    continue
                del inc[x]
                del ends[e1], ends[e2]
                inc[u].discard(e1)
                inc[v].discard(e2)
                new = next_id
                next_id += 1
                ends[new] = (min(u, v), max(u, v))
                inc[u].add(new)
                inc[v].add(new)
                steps.append(SeriesStep(x, u, v, e1, e2, new))
                progressed = True
                break
        if progressed:
            continue
        by_pair: dict[tuple[int, int], list[int]] = {}
        for e in sorted(ends):
            by_pair.setdefault(ends[e], []).append(e)
        for e in sorted(e for es in by_pair.values() for e in es[1:]):
            u, v = ends[e]
            if (len(inc[u]) > 2 and len(inc[v]) > 2) or len(inc) == 2:
                del ends[e]
                inc[u].discard(e)
                inc[v].discard(e)
                steps.append(ParallelStep(e, u, v))
                progressed = True
                break
        if not progressed:
            return None


def is_series_parallel_subcubic(g: Multigraph) -> bool:
    return series_parallel_reduction(g) is not None


def _outerplanar_flag(g: Multigraph) -> Optional[bool]:
    if not g.is_simple():
        return None
    return outer_embedding(g) is not None


def classify(g: Multigraph) -> ClassReport:
    delta = g.max_degree()
    subcubic = delta <= 3
    cubic = g.vertex_count > 0 and all(g.degree(v) == 3 for v in g.vertices)
    return ClassReport(
        is_tree=is_tree(g),
        is_subcubic=subcubic,
        is_cubic=cubic,
        is_claw_free=not has_claw(g),
        is_2_degenerate=is_2_degenerate(g),
        is_k4_free=not has_k4(g),
        is_k4_minus_e_free=not has_k4_minus_e(g),
        is_series_parallel_subcubic=subcubic and is_series_parallel_subcubic(g),
        is_outerplanar=_outerplanar_flag(g),
        max_degree=delta,
    )
