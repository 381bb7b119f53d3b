"""Local extension steps for subcubic graphs.

Each routine extends a valid partial 2-tone coloring to a few uncolored edges
around one vertex, following a fixed case analysis.  The palette lower bounds
(7, 10 and 9) are those for which the case analysis always succeeds; a
failure under met preconditions raises :class:`ColoringDefect`.
"""

from __future__ import annotations

from typing import Optional

from ..coloring import (
    PartialColoring,
    candidate_labels,
    free_colors,
    max_intersecting_family,
    pivot_family,
    valid_labels,
)
from ..errors import ColoringDefect, InputError
from ..graph import Multigraph
from .base import Recorder, TraceStep


def colors_at(g: Multigraph, c: PartialColoring, v: int, skip: int | None = None) -> set[int]:
    """Colors on the colored edges at ``v``, ignoring edge ``skip``."""
    out: set[int] = set()
    for f in g.incident(v):
        if f != skip and f in c:
            out |= c[f]
    return out


def _check_subcubic(g: Multigraph) -> None:
    if g.max_degree() > 3:
        raise InputError("graph is not subcubic")


def _require_palette(c: PartialColoring, k_min: int, what: str) -> None:
    if c.t != 2:
        raise InputError(f"{what} works with t = 2")
    if c.k < k_min:
        raise InputError(f"{what} needs at least {k_min} colors, got {c.k}")


def _run(c: PartialColoring, trace: Optional[list[TraceStep]], body) -> PartialColoring:
    rec = Recorder(c.k, c.t)
    rec.coloring = c
    body(rec)
    if trace is not None:
        trace.extend(rec.trace)
    return rec.coloring


# -- pendant edge ------------------------------------------------------------


def pendant_step(g: Multigraph, rec: Recorder, e: int) -> None:
    free = free_colors(g, rec.coloring, e)
    if len(free) < 3:
        raise ColoringDefect(f"pendant edge {e}: only {len(free)} free colors")
    rec.extend_from(g, e, max_intersecting_family(free), "pendant")


def extend_pendant_edge(
    g: Multigraph, c: PartialColoring, e: int, trace: Optional[list[TraceStep]] = None
) -> PartialColoring:
    """Color an uncolored edge with an end of degree one (needs k >= 7)."""
    _check_subcubic(g)
    _require_palette(c, 7, "pendant-edge extension")
    if e in c:
        raise InputError(f"edge {e} is already colored")
    u, v = g.endpoints(e)
    if g.degree(u) != 1 and g.degree(v) != 1:
        raise InputError(f"edge {e} has no end of degree one")
    return _run(c, trace, lambda rec: pendant_step(g, rec, e))


# -- degree-two vertex -------------------------------------------------------


def degree_two_step(g: Multigraph, rec: Recorder, u: int) -> None:
    e1, e2 = sorted(g.incident(u))
    u2 = g.other_end(e2, u)
    free1 = sorted(free_colors(g, rec.coloring, e1))
    if len(free1) < 6:
        raise ColoringDefect(f"degree-two vertex {u}: only {len(free1)} free colors at edge {e1}")
    pivot, rest = free1[0], free1[1:6]
    ok = valid_labels(g, rec.coloring, e1, pivot_family(pivot, rest))
    if len(ok) < 2:
        raise ColoringDefect(f"degree-two vertex {u}: fewer than two valid labels at edge {e1}")
    near2 = colors_at(g, rec.coloring, u2, skip=e2)
    meeting = [lab for lab in ok if lab & near2]
    if meeting:
        # The label reuses a color already next to the second edge, so that
        # edge keeps at least five free colors.
        rec.assign(e1, meeting[0], "degree2-shared")
        free2 = free_colors(g, rec.coloring, e2)
        rec.extend_from(g, e2, candidate_labels(free2), "degree2-shared")
        return
    first, second = ok[0], ok[1]
    rec.assign(e1, first, "degree2-pivot")
    (y,) = second - {pivot}
    free2 = free_colors(g, rec.coloring, e2)
    if y not in free2:
        raise ColoringDefect(f"degree-two vertex {u}: color {y} is not free at edge {e2}")
    others = sorted(free2 - {y})[:3]
    if len(others) < 3:
        raise ColoringDefect(f"degree-two vertex {u}: fewer than four free colors at edge {e2}")
    rec.extend_from(g, e2, pivot_family(y, others), "degree2-pivot")


def extend_degree_two(
    g: Multigraph, c: PartialColoring, u: int, trace: Optional[list[TraceStep]] = None
) -> PartialColoring:
    """Color both uncolored edges at a degree-two vertex (needs k >= 10)."""
    _check_subcubic(g)
    _require_palette(c, 10, "degree-two extension")
    if not g.is_simple():
        raise InputError("degree-two extension needs a simple graph")
    if g.degree(u) != 2:
        raise InputError(f"vertex {u} does not have degree two")
    if any(e in c for e in g.incident(u)):
        raise InputError(f"edges at vertex {u} must be uncolored")
    return _run(c, trace, lambda rec: degree_two_step(g, rec, u))


# -- diamond -----------------------------------------------------------------


def diamond_roles(g: Multigraph, u: int) -> Optional[tuple[int, int, int]]:
    """(u1, u2, u3) with u2 adjacent to u1 and u3, or None."""
    nbrs = sorted(g.neighbors(u))
    if g.degree(u) != 3 or len(nbrs) != 3:
        return None
    for u2 in nbrs:
        u1, u3 = [w for w in nbrs if w != u2]
        if g.has_edge(u2, u1) and g.has_edge(u2, u3):
            return u1, u2, u3
    return None


def diamond_step(g: Multigraph, rec: Recorder, u: int, roles: tuple[int, int, int]) -> None:
    u1, u2, u3 = roles
    c = rec.coloring
    (e12,) = g.edges_between(u1, u2)
    (e23,) = g.edges_between(u2, u3)
    (eu1,) = g.edges_between(u, u1)
    (eu2,) = g.edges_between(u, u2)
    (eu3,) = g.edges_between(u, u3)
    a_lab, b_lab = c[e12], c[e23]

    free1 = free_colors(g, c, eu1)
    pivots = sorted(b_lab & free1)
    if not pivots:
        raise ColoringDefect(f"diamond at {u}: both colors of edge {e23} are blocked at edge {eu1}")
    rec.extend_from(g, eu1, pivot_family(pivots[0], free1), "diamond")

    free3 = free_colors(g, rec.coloring, eu3)
    pivots = sorted(a_lab & free3)
    if not pivots:
        raise ColoringDefect(f"diamond at {u}: both colors of edge {e12} are blocked at edge {eu3}")
    rec.extend_from(g, eu3, pivot_family(pivots[0], free3), "diamond")

    free2 = free_colors(g, rec.coloring, eu2)
    if len(free2) < 3:
        raise ColoringDefect(f"diamond at {u}: only {len(free2)} free colors at edge {eu2}")
    rec.extend_from(g, eu2, max_intersecting_family(free2), "diamond")


def extend_diamond(
    g: Multigraph, c: PartialColoring, u: int, trace: Optional[list[TraceStep]] = None
) -> PartialColoring:
    """Color the three edges at ``u`` when one neighbor of ``u`` is adjacent to
    the other two (needs k >= 9 and a cubic graph)."""
    _require_palette(c, 9, "diamond extension")
    if not g.is_simple() or g.min_degree() != 3 or g.max_degree() != 3:
        raise InputError("diamond extension needs a simple cubic graph")
    roles = diamond_roles(g, u)
    if roles is None:
        raise InputError(f"vertex {u} is not the apex of a diamond")
    u1, _, u3 = roles
    if g.has_edge(u1, u3):
        raise InputError("the closed neighborhood of the vertex is a K4")
    if any(e in c for e in g.incident(u)):
        raise InputError(f"edges at vertex {u} must be uncolored")
    if any(e not in c for e in g.edges_between(u1, roles[1]) + g.edges_between(roles[1], u3)):
        raise InputError("the two diamond edges away from the vertex must be colored")
    return _run(c, trace, lambda rec: diamond_step(g, rec, u, roles))
