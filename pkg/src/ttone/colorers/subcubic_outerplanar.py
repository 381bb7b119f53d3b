"""2-tone 8-coloring of subcubic outerplanar graphs via pendant faces."""

from __future__ import annotations

from ..coloring import candidate_labels, free_colors, max_intersecting_family, valid_labels
from ..errors import ColoringDefect, HypothesisViolated, LimitReached
from ..exact import SolveOptions, Status, extend_exact
from ..graph import Multigraph
from ..outerplanar import PendantFace, find_pendant_face, outer_embedding
from .base import ColorerOutcome, Peel, Recorder, color_path_or_cycle, peel_and_extend
from .extensions import pendant_step

K = 8


class CounterexampleFound(ColoringDefect):
    """The exact fallback proved a subcubic outerplanar graph needs more than 8 colors."""

    def __init__(self, graph: Multigraph):
        super().__init__(f"subcubic outerplanar graph with no 2-tone 8-coloring: {graph!r}")
        self.graph = graph


def _edge(h: Multigraph, a: int, b: int) -> int:
    (e,) = h.edges_between(a, b)
    return e


def _outside(h: Multigraph, v: int, face: tuple[int, ...]) -> int:
    (w,) = h.neighbors(v) - set(face)
    return w


def _long_face(pf: PendantFace) -> Peel:
    cyc = pf.cycle
    v2, v3, v4 = cyc[1], cyc[2], cyc[3]

    def extend(h: Multigraph, rec: Recorder) -> None:
        e23, e34 = _edge(h, v2, v3), _edge(h, v3, v4)
        for e in ((e34, e23) if len(cyc) == 4 else (e23, e34)):
            rec.extend_from(h, e, candidate_labels(free_colors(h, rec.coloring, e)), "face")

    return Peel((v3,), extend)


def _triangle_one_heavy(pf: PendantFace) -> Peel:
    v1, v2, v3 = pf.cycle

    def extend(h: Multigraph, rec: Recorder) -> None:
        y = _outside(h, v1, pf.cycle)
        ys = sorted(h.neighbors(y) - {v1})
        roles = dict(zip((1, 2), sorted(rec.coloring[_edge(h, v1, y)])))
        for base, w in zip((3, 5), ys):
            roles.update(zip((base, base + 1), sorted(rec.coloring[_edge(h, y, w)])))
        rec.normalize(roles)
        rec.place(h, _edge(h, v1, v2), (4, 7), "face")
        rec.place(h, _edge(h, v2, v3), (1, 6), "face")
        rec.place(h, _edge(h, v1, v3), (3, 5), "face")

    return Peel((v2, v3), extend)


def _triangle_two_heavy(pf: PendantFace) -> Peel:
    a, c, b = pf.cycle  # a and b have degree 3, c has degree 2

    def extend(h: Multigraph, rec: Recorder) -> None:
        y1 = _outside(h, a, pf.cycle)
        y2 = _outside(h, b, pf.cycle)
        col = rec.coloring
        ab, ay, by = col[_edge(h, a, b)], col[_edge(h, a, y1)], col[_edge(h, b, y2)]
        roles = dict(zip((1, 2), sorted(ab)))
        roles.update(zip((3, 4), sorted(ay)))
        roles[5] = min(by - ay)
        rec.normalize(roles)
        ac = _edge(h, a, c)
        ok = valid_labels(h, rec.coloring, ac, [(5, 6), (5, 7), (5, 8)])
        if not ok:
            raise ColoringDefect(f"pendant triangle at {a}: no valid label among 56, 57, 58")
        rec.assign(ac, ok[0], "face")
        bc = _edge(h, b, c)
        free = free_colors(h, rec.coloring, bc)
        if len(free) < 3:
            raise ColoringDefect(f"pendant triangle at {b}: only {len(free)} free colors")
        rec.extend_from(h, bc, max_intersecting_family(free), "face")

    return Peel((c,), extend)


def color_subcubic_outerplanar(g: Multigraph, opts: SolveOptions | None = None) -> ColorerOutcome:
    if not g.is_simple() or g.max_degree() > 3:
        raise HypothesisViolated("color_subcubic_outerplanar needs a simple subcubic graph")
    if outer_embedding(g) is None:
        raise HypothesisViolated("graph is not outerplanar")
    fallback = []

    def exact_rest(h: Multigraph, rec: Recorder) -> None:
        res = extend_exact(h, rec.coloring, opts)
        if res.status is Status.NO:
            raise CounterexampleFound(h)
        if res.status is Status.UNKNOWN:
            raise LimitReached("exact fallback hit its limit")
        for e in sorted(h.edges):
            if e not in rec.coloring:
                rec.assign(e, res.witness[e], "exact")

    def choose(h: Multigraph) -> Peel:
        for u in h.vertices:
            if h.degree(u) == 1:
                (e,) = h.incident(u)
                return Peel((u,), lambda h, rec, e=e: pendant_step(h, rec, e))
        for comp in h.components():
            if len(comp) > 1 and all(h.degree(v) == 2 for v in comp):
                return Peel(tuple(comp), lambda h, rec, comp=comp: color_path_or_cycle(h, comp, rec, K))
        pf = find_pendant_face(h, outer_embedding(h))
        if pf is None:
            fallback.append(h)
            return Peel(tuple(v for v in h.vertices if h.degree(v) > 0), exact_rest)
        if len(pf.cycle) >= 4:
            return _long_face(pf)
        if pf.degree3 == 1:
            return _triangle_one_heavy(pf)
        return _triangle_two_heavy(pf)

    rec = Recorder(K)
    peel_and_extend(g, choose, rec)
    return rec.outcome(g, "subcubic_outerplanar", fallback_used=bool(fallback))
