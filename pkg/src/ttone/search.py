"""Small cubic graphs up to isomorphism, and exhaustive index scans over them."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .coloring import PartialColoring, verify
from .errors import InputError
from .exact import SolveOptions, Status, exact_index, is_k_colorable
from .graph import Multigraph
from .io import from_graph6, to_graph6
from .structure import PATTERNS, contains_subgraph

MAX_ORDER = 14

# -- canonical form ----------------------------------------------------------


def _dense_adjacency(g: Multigraph) -> list[list[int]]:
    if not g.is_simple():
        raise InputError("canonical form needs a simple graph")
    dense, _, _ = g.relabeled()
    adj = [[] for _ in range(dense.vertex_count)]
    for _, u, v in dense.edge_items():
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _distance_profile(adj: list[list[int]], s: int) -> tuple[int, ...]:
    dist = {s: 0}
    queue = deque([s])
    counts = [0] * len(adj)
    while queue:
        v = queue.popleft()
        counts[dist[v]] += 1
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    unreached = len(adj) - len(dist)
    while counts and counts[-1] == 0:
        counts.pop()
    return (len(adj[s]), unreached, *counts)


def _rank(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    while True:
        keys = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        new = _rank(keys)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _bits(adj_sets: list[set[int]], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    inv = [0] * n
    for v, i in pos.items():
        inv[i] = v
    return tuple(
        1 if inv[i] in adj_sets[inv[j]] else 0 for j in range(1, n) for i in range(j)
    )


def canonical_graph6(g: Multigraph) -> str:
    """graph6 string of a canonical relabeling; equal iff the graphs are isomorphic.

    Vertices start colored by degree and distance profile, colors are refined
    by neighbor multisets, and ties are broken by trying every vertex of the
    first non-singleton cell.  The smallest adjacency string over all leaves
    of that search is the canonical one.
    """
    adj = _dense_adjacency(g)
    n = len(adj)
    if n == 0:
        return to_graph6(Multigraph(0, []))
    adj_sets = [set(a) for a in adj]
    start = _refine(adj, _rank([_distance_profile(adj, v) for v in range(n)]))
    best: list[Optional[tuple[int, ...]]] = [None]
    stack = [start]
    while stack:
        colors = stack.pop()
        if len(set(colors)) == n:
            order = sorted(range(n), key=lambda v: colors[v])
            bits = _bits(adj_sets, order)
            if best[0] is None or bits < best[0]:
                best[0] = bits
            continue
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        # Twins (same neighbors apart from each other) in one cell are swapped
        # by an automorphism of the colored graph, so one of them suffices.
        reps: list[int] = []
        for v in range(n):
            if colors[v] == target and not any(adj_sets[v] - {w} == adj_sets[w] - {v} for w in reps):
                reps.append(v)
        for v in reps:
            split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            stack.append(_refine(adj, _rank(split)))
    bits = list(best[0])
    edges = []
    b = 0
    for j in range(1, n):
        for i in range(j):
            if bits[b]:
                edges.append((i, j))
            b += 1
    return to_graph6(Multigraph(n, edges))


# -- enumeration --------------------------------------------------------------


def _check_order(n: int) -> None:
    if n % 2 or not 4 <= n <= MAX_ORDER:
        raise InputError(f"cubic order must be even and in 4..{MAX_ORDER}, got {n}")


def enumerate_cubic(n: int) -> Iterator[Multigraph]:
    """Connected simple cubic graphs on n vertices, one per isomorphism class,
    in order of canonical graph6 string."""
    _check_order(n)
    for g6 in _cubic_layer(n):
        yield from_graph6(g6)


_LAYERS: dict[int, tuple[str, ...]] = {}


def _cubic_layer(n: int) -> tuple[str, ...]:
    if n not in _LAYERS:
        _LAYERS[n] = tuple(_fill_cubic(n))
    return _LAYERS[n]


def _fill_cubic(n: int) -> list[str]:
    """Breadth-first adjacency filling with isomorphism rejection.

    Vertex 0 is joined to 1, 2, 3; afterwards the lowest unsaturated vertex
    takes partners in increasing order, and an unseen vertex may only be the
    next unused label.  Every connected cubic graph has such a labeling (a
    breadth-first order from any vertex), so nothing is missed; every
    completed graph is reduced to its canonical form.  Returns the sorted
    canonical graph6 strings.
    """
    _check_order(n)
    adj = [set() for _ in range(n)]
    for w in (1, 2, 3):
        adj[0].add(w)
        adj[w].add(0)
    found: set[str] = set()

    def fill(v: int, fresh: int, low: int) -> None:
        while v < n and len(adj[v]) == 3:
            v, low = v + 1, 0
        if v == n:
            found.add(canonical_graph6(Multigraph(n, [(a, b) for a in range(n) for b in adj[a] if a < b])))
            return
        if v >= fresh:
            return
        for w in range(max(v + 1, low), min(fresh + 1, n)):
            if len(adj[w]) == 3 or w in adj[v]:
                continue
            adj[v].add(w)
            adj[w].add(v)
            fill(v, fresh + 1 if w == fresh else fresh, w + 1)
            adj[v].discard(w)
            adj[w].discard(v)

    fill(1, 4, 0)
    return sorted(found)


# -- scans --------------------------------------------------------------------


@dataclass(frozen=True)
class SearchTask:
    family: str = "cubic"
    max_n: int = 8
    forbidden: frozenset[str] = frozenset()
    t: int = 2
    threshold: int = 8
    min_n: int = 4
    node_limit: Optional[int] = None
    workers: int = 1

    def __post_init__(self):
        if self.family != "cubic":
            raise InputError(f"unsupported family {self.family!r}; only 'cubic'")
        if self.max_n % 2 or not 4 <= self.max_n <= MAX_ORDER:
            raise InputError(f"max_n must be even and in 4..{MAX_ORDER}")
        if self.min_n < 4 or self.min_n > self.max_n:
            raise InputError("min_n must be in 4..max_n")
        bad = set(self.forbidden) - set(PATTERNS)
        if bad:
            raise InputError(f"unknown forbidden patterns {sorted(bad)}; known: {', '.join(PATTERNS)}")
        if self.t < 1:
            raise InputError("t must be at least 1")
        if self.workers < 1:
            raise InputError("workers must be at least 1")
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))


@dataclass
class SearchFinding:
    graph: str
    n: int
    index: Optional[int]
    witness: Optional[PartialColoring]
    status: str = "exact"  # or "unknown"
    lower: int = 0
    nodes: int = 0

    def row(self) -> str:
        idx = "?" if self.index is None else str(self.index)
        return f"{self.n}\t{self.graph}\t{idx}\t{self.status}"


@dataclass
class SearchReport:
    task: SearchTask
    examined: int = 0
    filtered: int = 0
    findings: list[SearchFinding] = field(default_factory=list)
    max_index: Optional[int] = None


def _evaluate(args: tuple[str, int, int, Optional[int]]) -> SearchFinding:
    g6, t, threshold, node_limit = args
    g = from_graph6(g6)
    opts = SolveOptions(node_limit=node_limit)
    res = exact_index(g, t, opts)
    if res.index is None:
        return SearchFinding(g6, g.vertex_count, None, None, "unknown", res.lower, res.nodes)
    if verify(g, res.witness):
        raise AssertionError(f"invalid witness for {g6}")
    if res.index > t * g.max_degree():
        below = is_k_colorable(g, t, res.index - 1, SolveOptions(node_limit=node_limit))
        if below.status is not Status.NO:
            raise AssertionError(f"index of {g6} is not bracketed by a refutation at {res.index - 1}")
    return SearchFinding(g6, g.vertex_count, res.index, res.witness, "exact", res.index, res.nodes)


def candidate_graphs(task: SearchTask, stream: Iterable[str] | None = None) -> tuple[list[str], int]:
    """Canonical graph6 strings to examine, and how many were filtered out."""
    if stream is None:
        pool = [g6 for n in range(task.min_n, task.max_n + 1, 2) for g6 in _cubic_layer(n)]
    else:
        seen = set()
        for lineno, line in enumerate(stream, 1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            g = from_graph6(s)
            if g.vertex_count > task.max_n or g.vertex_count < task.min_n:
                continue
            if g.edge_count and (g.min_degree() != 3 or g.max_degree() != 3 or not g.is_connected()):
                continue
            seen.add(canonical_graph6(g))
        pool = sorted(seen)
    keep = [g6 for g6 in pool if not any(contains_subgraph(from_graph6(g6), p) for p in task.forbidden)]
    keep.sort(key=lambda s: (from_graph6(s).vertex_count, s))
    return keep, len(pool) - len(keep)


def run_search(task: SearchTask, stream: Iterable[str] | None = None, progress=None) -> SearchReport:
    """Exact index of every candidate; findings are those at or above the
    threshold plus any the solver could not settle, sorted by (n, graph6)."""
    graphs, filtered = candidate_graphs(task, stream)
    report = SearchReport(task, examined=len(graphs), filtered=filtered)
    jobs = [(g6, task.t, task.threshold, task.node_limit) for g6 in graphs]
    if task.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=task.workers) as ex:
            results = list(ex.map(_evaluate, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_evaluate(job))
            if progress is not None:
                progress(results[-1])
    for r in results:
        if r.index is not None:
            report.max_index = r.index if report.max_index is None else max(report.max_index, r.index)
        if r.index is None or r.index >= task.threshold:
            report.findings.append(r)
    report.findings.sort(key=lambda f: (f.n, f.graph))
    return report


def format_findings(report: SearchReport) -> str:
    return "".join(f.row() + "\n" for f in report.findings)
