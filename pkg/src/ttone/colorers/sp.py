"""2-tone 9-coloring of series-parallel subcubic multigraphs.

The graph is reduced to a digon by undoing subdivisions and parallel edges;
the coloring is then built forward, one construction step at a time.
"""

from __future__ import annotations

from ..coloring import free_colors, label_conflicts, max_intersecting_family, pivot_family, valid_labels
from ..errors import ColoringDefect, HypothesisViolated
from ..graph import Multigraph
from ..structure import ParallelStep, series_parallel_reduction
from .base import ColorerOutcome, Recorder


def _graph(ends: dict[int, tuple[int, int]]) -> Multigraph:
    verts = sorted({v for pair in ends.values() for v in pair})
    return Multigraph(edges=dict(ends), vertices=verts)


def _subdivide(h: Multigraph, rec: Recorder, step) -> None:
    x, u, v, e_ux, e_xv = step.x, step.u, step.v, step.e_ux, step.e_xv
    rec.normalize(dict(zip((1, 2), sorted(rec.coloring[step.e_uv]))))
    rec.uncolor(step.e_uv)
    spare = sorted(free_colors(h, rec.coloring, e_ux) - {1, 2})[:3]
    if len(spare) < 3:
        raise ColoringDefect(f"subdivision at {x}: fewer than three spare colors at edge {e_ux}")
    rec.normalize({1: 1, 2: 2, 7: spare[0], 8: spare[1], 9: spare[2]})
    for lab in ((7, 8), (7, 9), (8, 9)):
        if not label_conflicts(h, rec.coloring, e_ux, frozenset(lab)):
            rec.place(h, e_ux, lab, "series-spare")
            rec.place(h, e_xv, (1, 2), "series-spare")
            return
    # All three labels sit on second neighbors of ux; one of them is at v.
    at_v = [f for f in h.incident(v) if f != e_xv and rec.coloring[f] <= {7, 8, 9}]
    if not at_v:
        raise ColoringDefect(f"subdivision at {x}: no edge at {v} carries a label from 78, 79, 89")
    (missing,) = {7, 8, 9} - rec.coloring[at_v[0]]
    if missing != 7:
        rec.permute({missing: 7, 7: missing})
    ok = valid_labels(h, rec.coloring, e_ux, [(1, 8), (1, 9), (2, 8), (2, 9)])
    if not ok:
        raise ColoringDefect(f"subdivision at {x}: no valid label among 18, 19, 28, 29")
    p, q = sorted(ok[0])
    rec.permute({p: 2, 2: p} if p != 2 else {})
    if q != 8:
        rec.permute({q: 8, 8: q})
    rec.place(h, e_ux, (2, 8), "series-pivot")
    others = sorted(free_colors(h, rec.coloring, e_xv) - {1})[:3]
    rec.extend_from(h, e_xv, pivot_family(1, others), "series-pivot")


def color_sp_subcubic(g: Multigraph) -> ColorerOutcome:
    core = g.without_isolated()
    red = series_parallel_reduction(core)
    if red is None:
        raise HypothesisViolated("graph is not a series-parallel subcubic multigraph of order >= 2")
    u, v, e1, e2 = red.base
    ends = {e1: (u, v), e2: (u, v)}
    rec = Recorder(9)
    rec.assign(e1, (1, 2), "base")
    rec.assign(e2, (3, 4), "base")
    for step in reversed(red.steps):
        if isinstance(step, ParallelStep):
            ends[step.e] = (step.u, step.v)
            h = _graph(ends)
            free = free_colors(h, rec.coloring, step.e)
            if len(free) < 3:
                raise ColoringDefect(f"parallel edge {step.e}: only {len(free)} free colors")
            rec.extend_from(h, step.e, max_intersecting_family(free), "parallel")
        else:
            del ends[step.e_uv]
            ends[step.e_ux] = (step.u, step.x)
            ends[step.e_xv] = (step.x, step.v)
            _subdivide(_graph(ends), rec, step)
    return rec.outcome(g, "sp_subcubic")
