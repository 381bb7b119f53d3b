"""Subcubic colorers: 2-degenerate graphs with 10 colors and claw-free graphs
with 11 colors."""

from __future__ import annotations

from ..coloring import candidate_labels, free_colors, valid_labels
from ..errors import ColoringDefect, HypothesisViolated
from ..exact import Status, is_k_colorable
from ..graph import Multigraph
from ..structure import has_claw
from .base import ColorerOutcome, Peel, Recorder, peel_and_extend
from .extensions import degree_two_step, diamond_roles, diamond_step, pendant_step


def _require_subcubic(g: Multigraph, what: str) -> None:
    if not g.is_simple():
        raise HypothesisViolated(f"{what} needs a simple graph")
    if g.max_degree() > 3:
        raise HypothesisViolated(f"{what} needs a subcubic graph")


def _low_degree_peel(h: Multigraph) -> Peel | None:
    """Peel the lowest vertex of degree 1, else of degree 2."""
    for d in (1, 2):
        for u in h.vertices:
            if h.degree(u) == d:
                if d == 1:
                    (e,) = h.incident(u)
                    return Peel((u,), lambda h, rec, e=e: pendant_step(h, rec, e))
                return Peel((u,), lambda h, rec, u=u: degree_two_step(h, rec, u))
    return None


def color_2degenerate_subcubic(g: Multigraph) -> ColorerOutcome:
    _require_subcubic(g, "color_2degenerate_subcubic")

    def choose(h: Multigraph) -> Peel:
        step = _low_degree_peel(h)
        if step is None:
            raise HypothesisViolated("graph is not 2-degenerate: a subgraph has minimum degree 3")
        return step

    rec = Recorder(10)
    peel_and_extend(g, choose, rec)
    return rec.outcome(g, "degen2_subcubic")


# -- claw-free ---------------------------------------------------------------


def _is_k4_component(h: Multigraph, comp: list[int]) -> bool:
    return len(comp) == 4 and all(h.degree(v) == 3 for v in comp)


def _color_k4(h: Multigraph, comp: list[int], rec: Recorder) -> None:
    k4 = h.induced(comp)
    res = is_k_colorable(k4, 2, 9)
    if res.status is not Status.YES:
        raise ColoringDefect("K4 did not admit a 2-tone 9-coloring")
    for e, lab in res.witness.assignment.items():
        rec.assign(e, lab, "k4")


def _edge(h: Multigraph, a: int, b: int) -> int:
    (e,) = h.edges_between(a, b)
    return e


def _third(h: Multigraph, v: int, skip: set[int]) -> int:
    (w,) = h.neighbors(v) - skip
    return w


def triangle_pair_step(h: Multigraph, rec: Recorder, u: int, u1: int, u2: int, u3: int) -> None:
    """Color the edges at ``u`` in a cubic claw-free graph where u1u2 is the
    only edge among the neighbors of ``u``."""
    u1p = _third(h, u1, {u, u2})
    u2p = _third(h, u2, {u, u1})
    e12, e11, e22 = _edge(h, u1, u2), _edge(h, u1, u1p), _edge(h, u2, u2p)
    eu1, eu2, eu3 = _edge(h, u, u1), _edge(h, u, u2), _edge(h, u, u3)
    c = rec.coloring
    one_two, three_four, x = sorted(c[e12]), c[e11], c[e22]
    # Name colors so that f(u1u2) = 12, f(u1u1') = 34 with 3 missing from
    # f(u2u2'), and f(u2u2') is 45 or 56.
    three = min(three_four - x)
    (four,) = three_four - {three}
    outside = sorted(x - three_four)
    roles = {1: one_two[0], 2: one_two[1], 3: three, 4: four, 5: outside[0]}
    if len(outside) == 2:
        roles[6] = outside[1]
    rec.normalize(roles)

    first = [frozenset((5, z)) for z in (6, 7, 8, 9)]
    ok = valid_labels(h, rec.coloring, eu1, first)
    if not ok:
        raise ColoringDefect(f"claw-free step at {u}: no valid label in 56..59")
    (z,) = ok[0] - {5}
    if z != 9:
        rec.permute({z: 9, 9: z})
    rec.place(h, eu1, (5, 9), "clawfree")

    second = [frozenset((3, z)) for z in (7, 8, 10, 11)]
    ok = valid_labels(h, rec.coloring, eu2, second)
    near3 = [f for f in h.incident(u3) if f != eu3]
    blockers = [f for f in near3 if rec.coloring[f] in second]

    def rename(targets: tuple[int, ...]) -> None:
        chosen = [max(lab - {3}) for lab in ok[: len(targets)]]
        rest = [w for w in (7, 8, 10, 11) if w not in chosen]
        spare = [w for w in (7, 8, 10, 11) if w not in targets]
        perm = dict(zip(chosen, targets))
        perm.update(zip(rest, spare))
        rec.permute(perm)

    def finish_uu3() -> None:
        free = free_colors(h, rec.coloring, eu3)
        rec.extend_from(h, eu3, candidate_labels(free), "clawfree")

    if blockers:
        # A uu3-edge carries a label of the family, so it shares color 3
        # with whatever uu2 gets and uu3 keeps four free colors.
        if len(ok) < 2:
            raise ColoringDefect(f"claw-free step at {u}: fewer than two valid labels for uu2")
        rename((10, 11))
        rec.place(h, eu2, (3, 10), "clawfree-blocked")
        finish_uu3()
        return
    if len(ok) < 3:
        raise ColoringDefect(f"claw-free step at {u}: fewer than three valid labels for uu2")
    rename((8, 10, 11))
    near_colors = set()
    for f in near3:
        near_colors |= rec.coloring[f]
    for lab in ((3, 8), (3, 10), (3, 11)):
        if near_colors & set(lab):
            rec.place(h, eu2, lab, "clawfree-shared")
            finish_uu3()
            return
    rec.place(h, eu2, (3, 8), "clawfree-pivot")
    free = free_colors(h, rec.coloring, eu3)
    if not {10, 11} <= free:
        raise ColoringDefect(f"claw-free step at {u}: colors 10 and 11 not free at uu3")
    spare = sorted(free - {10, 11})
    if not spare:
        raise ColoringDefect(f"claw-free step at {u}: only two free colors at uu3")
    a = spare[0]
    rec.extend_from(h, eu3, [(a, 10), (a, 11), (10, 11)], "clawfree")


def _clawfree_peel(h: Multigraph) -> Peel:
    for comp in h.components():
        if _is_k4_component(h, comp):
            return Peel(tuple(comp), lambda h, rec, comp=comp: _color_k4(h, comp, rec))
    step = _low_degree_peel(h)
    if step is not None:
        return step
    live = [v for v in h.vertices if h.degree(v) > 0]
    for u in live:
        roles = diamond_roles(h, u)
        if roles is not None and not h.has_edge(roles[0], roles[2]):
            return Peel((u,), lambda h, rec, u=u, roles=roles: diamond_step(h, rec, u, roles))
    u = live[0]
    nbrs = sorted(h.neighbors(u))
    pairs = [(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1:] if h.has_edge(a, b)]
    if not pairs:
        raise HypothesisViolated(f"vertex {u} is the center of a claw")
    u1, u2 = pairs[0]
    (u3,) = set(nbrs) - {u1, u2}
    return Peel((u,), lambda h, rec: triangle_pair_step(h, rec, u, u1, u2, u3))


def color_clawfree_subcubic(g: Multigraph) -> ColorerOutcome:
    """2-tone coloring of a claw-free subcubic graph with 11 colors.

    A graph that is just K4 (plus isolated vertices) is colored with 9 colors
    by the exact solver instead.
    """
    _require_subcubic(g, "color_clawfree_subcubic")
    if has_claw(g):
        raise HypothesisViolated("graph contains an induced claw")
    core = g.without_isolated()
    comps = core.components()
    if len(comps) == 1 and _is_k4_component(core, comps[0]):
        rec = Recorder(9)
        _color_k4(core, comps[0], rec)
        return rec.outcome(g, "exact")
    rec = Recorder(11)
    peel_and_extend(g, _clawfree_peel, rec)
    return rec.outcome(g, "clawfree_subcubic")
