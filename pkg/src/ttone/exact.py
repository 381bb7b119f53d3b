"""Exact t-tone chromatic index by backtracking with forward checking.

Labels are indexed in lexicographic order and every edge keeps a bitset of
still-feasible label indices.  Assigning a label to an edge removes, from
each uncolored edge at distance d <= t, all labels sharing at least d colors
with it.  Palette symmetry is broken by only allowing a label to introduce
unused colors as the next consecutive ones.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .coloring import PartialColoring, verify
from .errors import InputError
from .graph import Multigraph, edge_ball


class Status(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass
class SolveOptions:
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None  # seconds
    initial_upper: Optional[int] = None
    symmetry_breaking: bool = True

    def __post_init__(self):
        for name in ("node_limit", "time_limit", "initial_upper"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise InputError(f"{name} must be positive")


@dataclass
class SolveResult:
    status: Status
    witness: Optional[PartialColoring] = None
    nodes: int = 0


@dataclass
class IndexResult:
    index: Optional[int]
    witness: Optional[PartialColoring]
    lower: int
    upper: Optional[int]
    nodes: int = 0
    steps: list[tuple[int, Status]] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.index is not None


class _Limit(Exception):
    pass


@lru_cache(maxsize=64)
def _label_tables(t: int, k: int):
    labels = [frozenset(c) for c in combinations(range(1, k + 1), t)]
    masks = [sum(1 << (c - 1) for c in lab) for lab in labels]
    n = len(labels)
    conflict = [[0] * n for _ in range(t + 1)]
    for i in range(n):
        for j in range(n):
            shared = (masks[i] & masks[j]).bit_count()
            for d in range(1, min(shared, t) + 1):
                conflict[d][i] |= 1 << j
    top = [max(lab) for lab in labels]
    canon = []
    for m in range(k + 1):
        bits = 0
        for j, lab in enumerate(labels):
            fresh = sorted(c for c in lab if c > m)
            if fresh == list(range(m + 1, m + 1 + len(fresh))):
                bits |= 1 << j
        canon.append(bits)
    return labels, conflict, top, canon


class _Search:
    def __init__(self, g: Multigraph, t: int, k: int, opts: SolveOptions, start: PartialColoring | None):
        self.t, self.k = t, k
        self.opts = opts
        self.labels, self.conflict, self.top, self.canon = _label_tables(t, k)
        self.edge_ids = sorted(g.edges)
        index = {e: i for i, e in enumerate(self.edge_ids)}
        self.m = len(self.edge_ids)
        self.near = []
        for e in self.edge_ids:
            ball = edge_ball(g, e, t)
            self.near.append([(index[f], d) for f, d in sorted(ball.items()) if f != e])
        self.degree = [g.edge_degree(e) for e in self.edge_ids]
        full = (1 << len(self.labels)) - 1
        self.dom = [full] * self.m
        self.assigned = [-1] * self.m
        self.nodes = 0
        self.deadline = None if opts.time_limit is None else time.monotonic() + opts.time_limit
        self.maxc = 0
        self.ok_start = True
        lab_index = {lab: j for j, lab in enumerate(self.labels)}
        if start is not None:
            for e, lab in start.assignment.items():
                j = lab_index[frozenset(lab)]
                if not (self.dom[index[e]] >> j) & 1:
                    self.ok_start = False
                    return
                if not self._assign(index[e], j, []):
                    self.ok_start = False
                    return
                self.maxc = max(self.maxc, self.top[j])
            if not opts.symmetry_breaking:
                self.maxc = k

    def _assign(self, i: int, j: int, trail: list) -> bool:
        self.assigned[i] = j
        dom = self.dom
        conflict = self.conflict
        for f, d in self.near[i]:
            if self.assigned[f] < 0:
                old = dom[f]
                new = old & ~conflict[d][j]
                if new != old:
                    trail.append((f, old))
                    dom[f] = new
                    if not new:
                        return False
        return True

    def _pick(self, maxc: int) -> int:
        canon = self.canon[maxc] if self.opts.symmetry_breaking else -1
        best, best_key = -1, None
        for i in range(self.m):
            if self.assigned[i] >= 0:
                continue
            key = ((self.dom[i] & canon).bit_count(), -self.degree[i], i)
            if best_key is None or key < best_key:
                best, best_key = i, key
                if key[0] <= 1:
                    break
        return best

    def run(self) -> bool:
        if not self.ok_start:
            return False
        return self._dfs(self.maxc if self.opts.symmetry_breaking else self.k,
                         sum(1 for a in self.assigned if a < 0))

    def _dfs(self, maxc: int, left: int) -> bool:
        self.nodes += 1
        if self.opts.node_limit is not None and self.nodes > self.opts.node_limit:
            raise _Limit
        if self.deadline is not None and (self.nodes & 1023) == 0 and time.monotonic() > self.deadline:
            raise _Limit
        if left == 0:
            return True
        i = self._pick(maxc)
        vals = self.dom[i] & (self.canon[maxc] if self.opts.symmetry_breaking else -1)
        while vals:
            low = vals & -vals
            vals ^= low
            j = low.bit_length() - 1
            trail: list = []
            if self._assign(i, j, trail):
                if self._dfs(max(maxc, self.top[j]), left - 1):
                    return True
            self.assigned[i] = -1
            for f, old in reversed(trail):
                self.dom[f] = old
        return False

    def witness(self) -> PartialColoring:
        return PartialColoring(
            self.t, self.k, {e: self.labels[self.assigned[i]] for i, e in enumerate(self.edge_ids)}
        )


def _solve(g: Multigraph, t: int, k: int, opts: SolveOptions, start: PartialColoring | None) -> SolveResult:
    if g.edge_count == 0:
        return SolveResult(Status.YES, PartialColoring(t, k, dict(start.assignment) if start else {}), 0)
    if k < t:
        return SolveResult(Status.NO, None, 0)
    s = _Search(g, t, k, opts, start)
    try:
        found = s.run()
    except _Limit:
        return SolveResult(Status.UNKNOWN, None, s.nodes)
    if not found:
        return SolveResult(Status.NO, None, s.nodes)
    w = s.witness()
    if verify(g, w):
        raise AssertionError("solver produced an invalid witness")
    return SolveResult(Status.YES, w, s.nodes)


def is_k_colorable(g: Multigraph, t: int, k: int, opts: SolveOptions | None = None) -> SolveResult:
    if t < 1:
        raise InputError("t must be at least 1")
    return _solve(g, t, k, opts or SolveOptions(), None)


def extend_exact(g: Multigraph, c: PartialColoring, opts: SolveOptions | None = None) -> SolveResult:
    """Complete ``c`` within its own palette, or prove that impossible."""
    if verify(g, c):
        raise InputError("extend_exact needs a valid partial coloring")
    if c.is_complete(g):
        return SolveResult(Status.YES, c, 0)
    return _solve(g, c.t, c.k, opts or SolveOptions(), c)


def trivial_upper(g: Multigraph, t: int) -> int:
    """A palette that always works: 6Δ-4 for t = 2, disjoint labels otherwise."""
    delta = g.max_degree()
    if t == 2 and delta >= 2:
        return 6 * delta - 4
    return max(t, t * g.edge_count)


def exact_index(g: Multigraph, t: int = 2, opts: SolveOptions | None = None) -> IndexResult:
    """Smallest k admitting a t-tone edge k-coloring, searched upward from tΔ."""
    opts = opts or SolveOptions()
    if g.edge_count == 0:
        return IndexResult(0, PartialColoring(t, 0, {}), 0, 0)
    lower = max(t, t * g.max_degree())
    upper = opts.initial_upper if opts.initial_upper is not None else trivial_upper(g, t)
    res = IndexResult(None, None, lower, upper)
    k = lower
    while True:
        r = is_k_colorable(g, t, k, opts)
        res.nodes += r.nodes
        res.steps.append((k, r.status))
        if r.status is Status.YES:
            res.index, res.witness, res.lower, res.upper = k, r.witness, k, k
            return res
        if r.status is Status.UNKNOWN:
            res.lower = k
            return res
        k += 1
        res.lower = k
