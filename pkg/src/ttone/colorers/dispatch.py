"""Pick the colorer with the smallest guaranteed palette for a graph."""

from __future__ import annotations

from ..bounds import greedy_bound, outerplanar_bound, planar_bound
from ..coloring import PartialColoring
from ..errors import HypothesisViolated, InputError, UnsupportedInput
from ..graph import Multigraph
from ..structure import ClassReport, classify
from .base import ColorerOutcome, Recorder, color_path_or_cycle
from .greedy import color_general, color_outerplanar, color_planar
from .sp import color_sp_subcubic
from .subcubic import color_2degenerate_subcubic, color_clawfree_subcubic
from .subcubic_outerplanar import color_subcubic_outerplanar
from .tree import color_tree


def color_paths_and_cycles(g: Multigraph) -> ColorerOutcome:
    """Exact coloring of a graph of maximum degree at most 2."""
    if g.max_degree() > 2:
        raise HypothesisViolated("color_paths_and_cycles needs maximum degree at most 2")
    comps = [c for c in g.components() if len(c) > 1]
    need = 0
    patterns = []
    for comp in comps:
        rec = Recorder(6)
        need = max(need, color_path_or_cycle(g, comp, rec))
        patterns.append(rec.coloring.assignment)
    rec = Recorder(need)
    for assignment in patterns:
        for e, lab in assignment.items():
            rec.assign(e, lab, "pattern")
    return rec.outcome(g, "path_cycle")


COLORERS = {
    "tree_exact": color_tree,
    "subcubic_outerplanar": color_subcubic_outerplanar,
    "sp_subcubic": color_sp_subcubic,
    "degen2_subcubic": color_2degenerate_subcubic,
    "clawfree_subcubic": color_clawfree_subcubic,
    "outerplanar": color_outerplanar,
    "planar": color_planar,
    "t1_6d4": color_general,
    "path_cycle": color_paths_and_cycles,
}


def applicable(g: Multigraph, classes: ClassReport | None = None, planar: bool = False) -> list[tuple[int, str]]:
    """(guaranteed k, strategy) for every colorer whose hypotheses hold, best first."""
    classes = classes or classify(g)
    delta = g.max_degree()
    simple = g.is_simple()
    out: list[tuple[int, str]] = []
    if simple and classes.is_tree and delta >= 3:
        out.append((2 * delta, "tree_exact"))
    if simple and classes.is_subcubic and classes.is_outerplanar:
        out.append((8, "subcubic_outerplanar"))
    if classes.is_series_parallel_subcubic:
        out.append((9, "sp_subcubic"))
    if simple and classes.is_subcubic and classes.is_2_degenerate:
        out.append((10, "degen2_subcubic"))
    if simple and classes.is_subcubic and classes.is_claw_free:
        out.append((11, "clawfree_subcubic"))
    if simple and classes.is_outerplanar and delta >= 2:
        out.append((outerplanar_bound(delta), "outerplanar"))
    if simple and planar and delta >= 2:
        out.append((planar_bound(delta), "planar"))
    if simple and delta >= 2:
        out.append((greedy_bound(delta), "t1_6d4"))
    order = list(COLORERS)
    out.sort(key=lambda kv: (kv[0], order.index(kv[1])))
    return out


def auto_color(g: Multigraph, planar: bool = False) -> ColorerOutcome:
    """Color ``g`` with the applicable colorer of smallest guaranteed palette.

    Graphs of maximum degree at most 2 get their exact value (at most 6).
    """
    if g.edge_count == 0:
        return ColorerOutcome(PartialColoring(2, 0), [], False, "empty")
    if g.max_degree() <= 2:
        return color_paths_and_cycles(g)
    options = applicable(g, planar=planar)
    if not options:
        raise UnsupportedInput("no colorer applies to this multigraph")
    return COLORERS[options[0][1]](g)


def color_with(g: Multigraph, strategy: str, planar: bool = False) -> ColorerOutcome:
    if strategy == "auto":
        return auto_color(g, planar=planar)
    try:
        fn = COLORERS[strategy]
    except KeyError:
        raise InputError(f"unknown strategy {strategy!r}; known: auto, {', '.join(COLORERS)}") from None
    return fn(g)
