"""Labels, partial t-tone edge colorings, the verifier and the extension engine.

A label is a frozenset of ``t`` distinct colors from ``1..k``.  Two edges at
line-graph distance ``d`` may share fewer than ``d`` colors, so only pairs at
distance ``<= t`` can ever conflict.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType

from .errors import ColoringDefect, InputError, TToneError
from .graph import Multigraph, edge_ball, intermediate_vertices

Label = frozenset


def label(*colors: int) -> frozenset[int]:
    return frozenset(colors)


def label_key(lab: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(lab))


def fmt_label(lab: Iterable[int]) -> str:
    """``{1,2}`` -> ``"12"``, with commas once any color has two digits."""
    cs = label_key(lab)
    if all(c < 10 for c in cs):
        return "".join(map(str, cs))
    return ",".join(map(str, cs))


@dataclass(frozen=True)
class PartialColoring:
    t: int
    k: int
    assignment: Mapping[int, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.t < 1:
            raise InputError("tone t must be at least 1")
        if self.assignment and self.t > self.k:
            raise InputError(f"palette k={self.k} is smaller than t={self.t}")
        frozen = {}
        for e, lab in self.assignment.items():
            lab = frozenset(lab)
            if len(lab) != self.t:
                raise InputError(f"label of edge {e} has {len(lab)} colors, expected {self.t}")
            if any(not (1 <= c <= self.k) for c in lab):
                raise InputError(f"label of edge {e} uses a color outside 1..{self.k}")
            frozen[e] = lab
        object.__setattr__(self, "assignment", MappingProxyType(dict(sorted(frozen.items()))))

    def __reduce__(self):
        # the read-only mapping view does not pickle; rebuild from a dict
        return (PartialColoring, (self.t, self.k, dict(self.assignment)))

    def __contains__(self, e: int) -> bool:
        return e in self.assignment

    def __getitem__(self, e: int) -> frozenset[int]:
        return self.assignment[e]

    def __len__(self) -> int:
        return len(self.assignment)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self.t == other.t and self.k == other.k and dict(self.assignment) == dict(other.assignment)

    def __hash__(self) -> int:
        return hash((self.t, self.k, tuple(self.assignment.items())))

    def get(self, e: int):
        return self.assignment.get(e)

    def with_label(self, e: int, lab: Iterable[int]) -> "PartialColoring":
        new = dict(self.assignment)
        new[e] = frozenset(lab)
        return PartialColoring(self.t, self.k, new)

    def without(self, edges: Iterable[int]) -> "PartialColoring":
        drop = set(edges)
        return PartialColoring(self.t, self.k, {e: l for e, l in self.assignment.items() if e not in drop})

    def restricted(self, edges: Iterable[int]) -> "PartialColoring":
        keep = set(edges)
        return PartialColoring(self.t, self.k, {e: l for e, l in self.assignment.items() if e in keep})

    def with_palette(self, k: int) -> "PartialColoring":
        return PartialColoring(self.t, k, self.assignment)

    def permuted(self, perm: Mapping[int, int]) -> "PartialColoring":
        """Rename colors by ``perm`` (colors missing from the map are fixed)."""
        return PartialColoring(
            self.t,
            self.k,
            {e: frozenset(perm.get(c, c) for c in l) for e, l in self.assignment.items()},
        )

    def colors_used(self) -> set[int]:
        out: set[int] = set()
        for l in self.assignment.values():
            out |= l
        return out

    def is_complete(self, g: Multigraph) -> bool:
        return all(e in self.assignment for e in g.edges)


@dataclass(frozen=True)
class Violation:
    e: int
    e2: int
    distance: int
    shared: frozenset[int]


class InvalidExtension(TToneError, ValueError):
    def __init__(self, edge: int, lab, violations: Sequence[Violation]):
        self.edge = edge
        self.label = lab
        self.violations = list(violations)
        super().__init__(
            f"label {fmt_label(lab)} on edge {edge} violates "
            + ", ".join(f"({v.e},{v.e2}) at distance {v.distance}" for v in self.violations)
        )


class ColoringStuck(TToneError):
    """Greedy extension found no valid label for ``edge``."""

    def __init__(self, edge: int, coloring: PartialColoring, reason: str = ""):
        self.edge = edge
        self.coloring = coloring
        super().__init__(f"no valid label for edge {edge}" + (f": {reason}" if reason else ""))


def _check_edges(g: Multigraph, c: PartialColoring) -> None:
    for e in c.assignment:
        if not g.has_edge_id(e):
            raise InputError(f"colored edge {e} does not exist in the graph")


def verify(g: Multigraph, c: PartialColoring) -> list[Violation]:
    """Every colored pair that shares at least as many colors as its distance."""
    _check_edges(g, c)
    out = []
    for e, lab in c.assignment.items():
        for f, d in edge_ball(g, e, c.t).items():
            if f <= e or f not in c.assignment:
                continue
            shared = lab & c.assignment[f]
            if len(shared) >= d:
                out.append(Violation(e, f, d, frozenset(shared)))
    out.sort(key=lambda v: (v.e, v.e2))
    return out


def is_valid(g: Multigraph, c: PartialColoring) -> bool:
    return not verify(g, c)


def free_colors(g: Multigraph, c: PartialColoring, e: int) -> set[int]:
    if e in c:
        raise InputError(f"edge {e} is already colored")
    used: set[int] = set()
    for f in g.adjacent_edges(e):
        lab = c.get(f)
        if lab:
            used |= lab
    return set(range(1, c.k + 1)) - used


def candidate_labels(free: Iterable[int], t: int = 2) -> list[frozenset[int]]:
    return [frozenset(p) for p in combinations(sorted(free), t)]


def max_intersecting_family(free: Iterable[int], t: int = 2) -> list[frozenset[int]]:
    """A largest pairwise intersecting family of 2-subsets of ``free``.

    Three free colors give all three pairs; more give the star through the
    smallest color.
    """
    if t != 2:
        raise InputError("max_intersecting_family is defined for t = 2")
    cs = sorted(set(free))
    if len(cs) < 3:
        raise InputError(f"need at least three free colors, got {len(cs)}")
    if len(cs) == 3:
        return candidate_labels(cs)
    pivot = cs[0]
    return [frozenset((pivot, x)) for x in cs[1:]]


def pivot_family(pivot: int, others: Iterable[int]) -> list[frozenset[int]]:
    return [frozenset((pivot, x)) for x in sorted(set(others) - {pivot})]


def is_pairwise_intersecting(family: Sequence[frozenset[int]]) -> bool:
    return all(a & b for a, b in combinations(family, 2))


def label_conflicts(g: Multigraph, c: PartialColoring, e: int, lab: frozenset[int]) -> list[Violation]:
    out = []
    for f, d in edge_ball(g, e, c.t).items():
        if f == e:
            continue
        other = c.get(f)
        if other is not None:
            shared = lab & other
            if len(shared) >= d:
                a, b = (e, f) if e < f else (f, e)
                out.append(Violation(a, b, d, frozenset(shared)))
    return out


def valid_labels(
    g: Multigraph, c: PartialColoring, e: int, family: Iterable[Iterable[int]]
) -> list[frozenset[int]]:
    """Labels of ``family`` that extend ``c`` to ``e``, in lexicographic order.

    When the family is pairwise intersecting and larger than the number of
    intermediate vertices m of ``e``, at least ``|family| - m`` survive; a
    shortfall raises :class:`ColoringDefect`.
    """
    fam = sorted({frozenset(l) for l in family}, key=label_key)
    free = free_colors(g, c, e)
    for lab in fam:
        if len(lab) != c.t:
            raise InputError(f"label {fmt_label(lab)} does not have {c.t} colors")
        if not lab <= free:
            raise InputError(f"label {fmt_label(lab)} uses a color that is not free at edge {e}")
    ok = [lab for lab in fam if not label_conflicts(g, c, e, lab)]
    if c.t == 2 and fam and is_pairwise_intersecting(fam):
        m = len(intermediate_vertices(g, e))
        if len(fam) > m and len(ok) < len(fam) - m:
            raise ColoringDefect(
                f"edge {e}: {len(ok)} valid labels out of {len(fam)} with {m} intermediate vertices"
            )
    return ok


def extend(g: Multigraph, c: PartialColoring, e: int, lab: Iterable[int]) -> PartialColoring:
    if not g.has_edge_id(e):
        raise InputError(f"unknown edge id {e}")
    if e in c:
        raise InputError(f"edge {e} is already colored")
    lab = frozenset(lab)
    new = c.with_label(e, lab)
    bad = label_conflicts(g, c, e, lab)
    if bad:
        raise InvalidExtension(e, lab, bad)
    return new


def greedy_color(
    g: Multigraph, k: int, order: Sequence[int] | None = None, t: int = 2,
    start: PartialColoring | None = None,
) -> PartialColoring:
    """Extend edge by edge; each edge takes the first valid label of a largest
    pairwise intersecting family over its free colors (the single candidate
    when only two colors are free).

    Raises :class:`ColoringStuck` naming the edge where this fails.
    """
    if t != 2:
        raise InputError("greedy_color is implemented for t = 2")
    order = list(g.edges) if order is None else list(order)
    if sorted(order) != sorted(g.edges):
        raise InputError("order must be a permutation of the edges")
    c = start if start is not None else PartialColoring(t, k)
    for e in order:
        if e in c:
            continue
        free = free_colors(g, c, e)
        if len(free) < 2:
            raise ColoringStuck(e, c, f"only {len(free)} free colors")
        fam = max_intersecting_family(free) if len(free) >= 3 else candidate_labels(free)
        ok = valid_labels(g, c, e, fam)
        if not ok:
            raise ColoringStuck(e, c)
        c = c.with_label(e, ok[0])
    return c
