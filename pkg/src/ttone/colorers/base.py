"""Shared machinery for the constructive colorers.

Every colorer peels vertices off the graph until nothing is left, then puts
them back in reverse order, extending the coloring at each step.  The graph
used at a step is always the vertex-deleted subgraph current at that step, so
a coloring valid there stays a valid partial coloring of every larger stage.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Optional

from ..coloring import (
    PartialColoring,
    fmt_label,
    label_conflicts,
    label_key,
    valid_labels,
    verify,
)
from ..errors import ColoringDefect, InputError
from ..graph import Multigraph


@dataclass(frozen=True)
class TraceStep:
    kind: str
    edge: Optional[int] = None
    label: Optional[tuple[int, ...]] = None
    perm: Optional[tuple[tuple[int, int], ...]] = None

    def as_list(self) -> list:
        if self.kind == "permute":
            return [self.kind, None, [list(p) for p in self.perm]]
        return [self.kind, self.edge, list(self.label) if self.label is not None else None]

    @classmethod
    def from_list(cls, item: Sequence) -> "TraceStep":
        kind, edge, payload = item
        if kind == "permute":
            return cls(kind, perm=tuple((int(a), int(b)) for a, b in payload))
        return cls(kind, edge, tuple(payload) if payload is not None else None)

    def __str__(self) -> str:
        if self.kind == "permute":
            moved = [f"{a}->{b}" for a, b in self.perm if a != b]
            return f"permute {' '.join(moved) or 'identity'}"
        if self.label is None:
            return f"{self.kind} e{self.edge}"
        return f"{self.kind} e{self.edge} = {fmt_label(self.label)}"


@dataclass
class ColorerOutcome:
    coloring: PartialColoring
    trace: list[TraceStep] = field(default_factory=list)
    fallback_used: bool = False
    strategy: str = ""

    @property
    def k(self) -> int:
        return self.coloring.k

    def as_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "fallback_used": self.fallback_used,
            "trace": [s.as_list() for s in self.trace],
        }


def replay(trace: Iterable[TraceStep], t: int, k: int) -> PartialColoring:
    assignment: dict[int, frozenset[int]] = {}
    for s in trace:
        if s.kind == "permute":
            perm = dict(s.perm)
            assignment = {e: frozenset(perm.get(c, c) for c in l) for e, l in assignment.items()}
        elif s.kind == "uncolor":
            assignment.pop(s.edge, None)
        else:
            assignment[s.edge] = frozenset(s.label)
    return PartialColoring(t, k, assignment)


class Recorder:
    """Current coloring plus the trace of every step that produced it."""

    def __init__(self, k: int, t: int = 2):
        self.coloring = PartialColoring(t, k)
        self.trace: list[TraceStep] = []

    def assign(self, e: int, lab: Iterable[int], kind: str = "extend") -> None:
        lab = frozenset(lab)
        self.coloring = self.coloring.with_label(e, lab)
        self.trace.append(TraceStep(kind, e, label_key(lab)))

    def uncolor(self, e: int) -> None:
        self.coloring = self.coloring.without([e])
        self.trace.append(TraceStep("uncolor", e))

    def permute(self, perm: Mapping[int, int]) -> None:
        full = tuple((c, perm.get(c, c)) for c in range(1, self.coloring.k + 1))
        if all(a == b for a, b in full):
            return
        self.coloring = self.coloring.permuted(dict(full))
        self.trace.append(TraceStep("permute", perm=full))

    def normalize(self, roles: Mapping[int, int]) -> dict[int, int]:
        """Rename colors so each ``roles[r]`` (an actual color) becomes ``r``.

        Colors not mentioned keep their relative order on the remaining
        names.  Returns the applied map actual -> new.
        """
        perm = normalizing_permutation(roles, self.coloring.k)
        self.permute(perm)
        return perm

    def extend_from(self, g: Multigraph, e: int, family, kind: str = "extend") -> frozenset[int]:
        ok = valid_labels(g, self.coloring, e, family)
        if not ok:
            fam = ", ".join(fmt_label(l) for l in sorted(map(frozenset, family), key=label_key))
            raise ColoringDefect(f"no valid label for edge {e} among {{{fam}}}")
        self.assign(e, ok[0], kind)
        return ok[0]

    def place(self, g: Multigraph, e: int, lab: Iterable[int], kind: str = "extend") -> None:
        """Assign a fixed label (recoloring allowed), refusing any conflict."""
        lab = frozenset(lab)
        free = set(range(1, self.coloring.k + 1))
        if len(lab) != self.coloring.t or not lab <= free:
            raise ColoringDefect(f"label {fmt_label(lab)} is not a {self.coloring.t}-subset of the palette")
        bad = label_conflicts(g, self.coloring, e, lab)
        if bad:
            raise ColoringDefect(f"label {fmt_label(lab)} on edge {e} conflicts: {bad[0]}")
        self.assign(e, lab, kind)

    def outcome(self, g: Multigraph, strategy: str, fallback_used: bool = False) -> ColorerOutcome:
        c = self.coloring
        if set(c.assignment) != set(g.edges):
            raise ColoringDefect(f"{strategy}: coloring does not cover exactly the edges of the graph")
        bad = verify(g, c)
        if bad:
            raise ColoringDefect(f"{strategy}: produced {len(bad)} violations, first {bad[0]}")
        return ColorerOutcome(c, list(self.trace), fallback_used, strategy)


def normalizing_permutation(roles: Mapping[int, int], k: int) -> dict[int, int]:
    actual = list(roles.values())
    if len(set(actual)) != len(actual):
        raise InputError("role colors must be distinct")
    perm = {a: r for r, a in roles.items()}
    rest_actual = [c for c in range(1, k + 1) if c not in perm]
    rest_names = [c for c in range(1, k + 1) if c not in roles]
    perm.update(zip(rest_actual, rest_names))
    return perm


# -- paths and cycles ------------------------------------------------------


def _labels(k: int) -> list[frozenset[int]]:
    return [frozenset((a, b)) for a in range(1, k + 1) for b in range(a + 1, k + 1)]


def sequence_labels(length: int, k: int, cyclic: bool) -> Optional[list[frozenset[int]]]:
    """2-tone labels for the edges of a path or cycle with ``length`` edges.

    Consecutive edges get disjoint labels and edges two apart get distinct
    labels, cyclically when ``cyclic``.  The first two edges are fixed to 12
    and 34.  Returns ``None`` when no such sequence exists.
    """
    if length == 0:
        return []
    if k < 2:
        return None
    first = frozenset((1, 2))
    if length == 1:
        return [first]
    if k < 4:
        return None
    second = frozenset((3, 4))
    labs = _labels(k)
    if cyclic and length < 3:
        raise InputError("a cycle has at least three edges")
    layers = [{(first, second): None}]
    for _ in range(2, length):
        nxt = {}
        for (a, b) in layers[-1]:
            for c in labs:
                if c & b or c == a:
                    continue
                if (b, c) not in nxt:
                    nxt[(b, c)] = (a, b)
        layers.append(nxt)
    end = None
    for (a, b) in layers[-1]:
        if not cyclic:
            end = (a, b)
            break
        if not (b & first) and a != first and b != second:
            end = (a, b)
            break
    if end is None:
        return None
    seq = [end[1], end[0]]
    state = end
    for layer in reversed(layers[1:]):
        state = layer[state]
        seq.append(state[0])
    seq.reverse()
    return seq[:length] if len(seq) >= length else None


def walk_edges(g: Multigraph, comp: Sequence[int]) -> tuple[list[int], bool]:
    """Edge ids of a path or cycle component in traversal order."""
    comp_set = set(comp)
    ends = [v for v in comp if g.degree(v) == 1]
    start = min(ends) if ends else min(comp)
    order: list[int] = []
    used: set[int] = set()
    v = start
    while True:
        nxt = [e for e in g.incident(v) if e not in used]
        if not nxt:
            break
        e = min(nxt)
        used.add(e)
        order.append(e)
        v = g.other_end(e, v)
        if v == start:
            break
    assert all(v in comp_set for e in order for v in g.endpoints(e))
    return order, not ends


# -- peeling driver ----------------------------------------------------------


@dataclass
class Peel:
    """One peeling step: vertices removed from ``graph`` and how to put them back."""

    removed: tuple[int, ...]
    extend: object  # callable(graph, recorder)
    graph: Optional[Multigraph] = None


def peel_and_extend(g: Multigraph, choose, rec: Recorder) -> list[Peel]:
    """Peel with ``choose(h) -> Peel`` until no edge is left, then extend in
    reverse order, each step on the graph it was chosen from."""
    stages: list[Peel] = []
    h = g
    while h.edge_count:
        step = choose(h)
        if not step.removed:
            raise InputError("a peeling step must remove at least one vertex")
        step.graph = h
        stages.append(step)
        h = h.remove_vertices(step.removed)
    for step in reversed(stages):
        step.extend(step.graph, rec)
    return stages


def color_path_or_cycle(g: Multigraph, comp: Sequence[int], rec: Recorder, k: int | None = None) -> int:
    """Color one path or cycle component with its exact number of colors.

    Returns the number of colors the pattern needs.  ``k`` caps the palette
    the pattern may use (defaults to the exact value).
    """
    from ..bounds import cycle_index_2tone, path_index

    order, cyclic = walk_edges(g, comp)
    if cyclic and len(order) == 2:
        need = 4
        labels = [frozenset((1, 2)), frozenset((3, 4))]
    else:
        need = cycle_index_2tone(len(order)) if cyclic else path_index(len(order) + 1, 2)
        labels = sequence_labels(len(order), need, cyclic)
        if labels is None:
            raise ColoringDefect(f"no {need}-color pattern for a {'cycle' if cyclic else 'path'} of length {len(order)}")
    if k is not None and need > k:
        raise ColoringDefect(f"component needs {need} colors, palette has {k}")
    for e, lab in zip(order, labels):
        rec.assign(e, lab, "pattern")
    return need
