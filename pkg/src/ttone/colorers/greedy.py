"""Colorers that extend one edge at a time from a largest intersecting family:
the general 6Δ-4 bound and the planar and outerplanar peeling orders."""

from __future__ import annotations

from ..bounds import greedy_bound, outerplanar_bound, planar_bound
from ..coloring import ColoringStuck, free_colors, greedy_color, label_key, max_intersecting_family
from ..errors import ColoringDefect, HypothesisViolated
from ..graph import Multigraph
from .base import ColorerOutcome, Peel, Recorder, TraceStep, peel_and_extend


def _require_simple(g: Multigraph, what: str) -> int:
    if not g.is_simple():
        raise HypothesisViolated(f"{what} needs a simple graph")
    delta = g.max_degree()
    if delta < 2:
        raise HypothesisViolated(f"{what} needs maximum degree at least 2")
    return delta


def extend_by_family(h: Multigraph, rec: Recorder, e: int, kind: str) -> None:
    free = free_colors(h, rec.coloring, e)
    if len(free) < 3:
        raise ColoringDefect(f"edge {e}: only {len(free)} free colors")
    rec.extend_from(h, e, max_intersecting_family(free), kind)


def color_general(g: Multigraph) -> ColorerOutcome:
    """Greedy 2-tone coloring with 6Δ-4 colors, edges in id order."""
    delta = _require_simple(g, "color_general")
    k = greedy_bound(delta)
    order = sorted(g.edges)
    try:
        c = greedy_color(g, k, order)
    except ColoringStuck as exc:
        raise ColoringDefect(f"greedy coloring with {k} colors stuck at edge {exc.edge}") from exc
    rec = Recorder(k)
    rec.coloring = c
    rec.trace = [TraceStep("greedy", e, label_key(c[e])) for e in order]
    return rec.outcome(g, "t1_6d4")


def planar_vertex(h: Multigraph) -> int | None:
    """Lowest vertex of degree 1..5 with at most two neighbors of degree >= 11."""
    for v in h.vertices:
        d = h.degree(v)
        if 1 <= d <= 5 and sum(1 for w in h.neighbors(v) if h.degree(w) >= 11) <= 2:
            return v
    return None


def color_planar(g: Multigraph) -> ColorerOutcome:
    """2-tone coloring with max(41, 3Δ+5) colors by peeling low-degree vertices.

    Planarity is not tested; the peeling only needs a suitable vertex at every
    stage and raises :class:`HypothesisViolated` when there is none.
    """
    delta = _require_simple(g, "color_planar")
    k = planar_bound(delta)

    def choose(h: Multigraph) -> Peel:
        u = planar_vertex(h)
        if u is None:
            raise HypothesisViolated(
                "no vertex of degree at most 5 with at most two neighbors of degree 11 or more"
            )

        def extend(h: Multigraph, rec: Recorder) -> None:
            nbrs = sorted(h.neighbors(u), key=lambda w: (h.degree(w) < 11, w))
            for w in nbrs:
                (e,) = h.edges_between(u, w)
                extend_by_family(h, rec, e, "planar")

        return Peel((u,), extend)

    rec = Recorder(k)
    peel_and_extend(g, choose, rec)
    return rec.outcome(g, "planar")


def outerplanar_edge(h: Multigraph) -> tuple[int, int] | None:
    """(u, v) with u of degree 1, else u of degree 2 and v a neighbor of degree <= 4."""
    for u in h.vertices:
        if h.degree(u) == 1:
            (v,) = h.neighbors(u)
            return u, v
    for u in h.vertices:
        if h.degree(u) == 2:
            for v in sorted(h.neighbors(u)):
                if h.degree(v) <= 4:
                    return u, v
    return None


def color_outerplanar(g: Multigraph) -> ColorerOutcome:
    """2-tone coloring with max(14, 3Δ) colors by peeling degree-1 or degree-2
    vertices next to a vertex of degree at most 4."""
    delta = _require_simple(g, "color_outerplanar")
    k = outerplanar_bound(delta)

    def choose(h: Multigraph) -> Peel:
        found = outerplanar_edge(h)
        if found is None:
            raise HypothesisViolated(
                "no degree-1 vertex and no degree-2 vertex with a neighbor of degree at most 4"
            )
        u, v = found

        def extend(h: Multigraph, rec: Recorder) -> None:
            (uv,) = h.edges_between(u, v)
            if h.degree(u) == 2:
                (w,) = h.neighbors(u) - {v}
                (uw,) = h.edges_between(u, w)
                extend_by_family(h, rec, uw, "outerplanar")
            extend_by_family(h, rec, uv, "outerplanar")

        return Peel((u,), extend)

    rec = Recorder(k)
    peel_and_extend(g, choose, rec)
    return rec.outcome(g, "outerplanar")
