"""Optimal 2-tone coloring of trees with maximum degree at least three."""

from __future__ import annotations

from collections import deque

from ..coloring import candidate_labels, free_colors, label_conflicts
from ..errors import ColoringDefect, HypothesisViolated
from ..graph import Multigraph
from ..structure import is_tree
from .base import ColorerOutcome, Peel, Recorder, peel_and_extend


def _depths(g: Multigraph, root: int) -> dict[int, int]:
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w not in depth:
                depth[w] = depth[v] + 1
                queue.append(w)
    return depth


def color_tree(g: Multigraph) -> ColorerOutcome:
    """2-tone coloring of a tree with exactly 2Δ colors."""
    h0 = g.without_isolated()
    if not g.is_simple() or not is_tree(h0):
        raise HypothesisViolated("color_tree needs a simple tree")
    delta = g.max_degree()
    if delta < 3:
        raise HypothesisViolated("color_tree needs maximum degree at least 3; use the path formula")
    k = 2 * delta
    root = min(v for v in h0.vertices if h0.degree(v) == delta)
    depth = _depths(h0, root)

    def base_star(h: Multigraph, rec: Recorder) -> None:
        for i, e in enumerate(sorted(h.incident(root))):
            rec.assign(e, (2 * i + 1, 2 * i + 2), "star")

    def leaf_step(v: int, leaf: int):
        def extend(h: Multigraph, rec: Recorder) -> None:
            (e1,) = h.edges_between(v, leaf)
            c = rec.coloring
            free = sorted(free_colors(h, c, e1))
            if h.degree(v) == 2:
                rec.extend_from(h, e1, candidate_labels(free), "tree")
                return
            if len(free) < 2:
                raise ColoringDefect(f"tree: fewer than two free colors at edge {e1}")
            a, b = free[0], free[1]
            if not label_conflicts(h, c, e1, frozenset((a, b))):
                rec.assign(e1, (a, b), "tree")
                return
            # ab sits on an edge at the parent of v; trade colors with a
            # sibling leaf edge so both new labels avoid it.
            siblings = sorted(
                w for w in h.neighbors(v) if w != leaf and h.degree(w) == 1
            )
            if not siblings:
                raise ColoringDefect(f"tree: vertex {v} has no second leaf")
            (e2,) = h.edges_between(v, siblings[0])
            cc, d = sorted(c[e2])
            rec.place(h, e2, (cc, a), "recolor")
            rec.place(h, e1, (d, b), "tree")

        return extend

    def choose(h: Multigraph) -> Peel:
        inner = [v for v in h.vertices if v != root and h.degree(v) >= 2]
        if not inner:
            return Peel(tuple(h.vertices), base_star)
        v = max(inner, key=lambda x: (depth[x], -x))
        leaf = max(w for w in h.neighbors(v) if h.degree(w) == 1)
        return Peel((leaf,), leaf_step(v, leaf))

    rec = Recorder(k)
    peel_and_extend(h0, choose, rec)
    return rec.outcome(g, "tree_exact")
