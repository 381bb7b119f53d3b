"""Loopless undirected multigraphs with stable vertex and edge identifiers.

Graphs built from an edge list get dense ids ``0..n-1`` / ``0..m-1``.
Subgraphs obtained by deleting vertices keep the ids of the parent graph,
which is what the peel-and-extend colorers rely on: a coloring keyed by
edge id stays meaningful as vertices are removed and put back.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from typing import Optional

from .errors import InputError

Edge = tuple[int, int]


class Multigraph:
    """Immutable loopless multigraph.

    ``edges`` may be a sequence of ``(u, v)`` pairs (ids assigned densely in
    order) or a mapping ``edge_id -> (u, v)``.  ``vertices`` defaults to
    ``range(vertex_count)``.
    """

    __slots__ = ("_vertices", "_ends", "_inc", "_adj")

    def __init__(
        self,
        vertex_count: int | None = None,
        edges: Iterable[Edge] | Mapping[int, Edge] = (),
        *,
        vertices: Iterable[int] | None = None,
    ):
        if vertices is None:
            if vertex_count is None or vertex_count < 0:
                raise InputError("vertex_count must be a nonnegative integer")
            verts = tuple(range(vertex_count))
        else:
            verts = tuple(sorted(set(vertices)))
        vset = set(verts)
        if isinstance(edges, Mapping):
            items = sorted(edges.items())
        else:
            items = list(enumerate(edges))
        ends: dict[int, Edge] = {}
        inc: dict[int, list[int]] = {v: [] for v in verts}
        for eid, (u, v) in items:
            if eid in ends:
                raise InputError(f"duplicate edge id {eid}")
            if u not in vset or v not in vset:
                raise InputError(f"edge {eid} = ({u}, {v}) has an endpoint outside the vertex set")
            if u == v:
                raise InputError(f"edge {eid} is a loop at vertex {u}")
            ends[eid] = (u, v) if u < v else (v, u)
            inc[u].append(eid)
            inc[v].append(eid)
        self._vertices = verts
        self._ends = ends
        self._inc = {v: tuple(es) for v, es in inc.items()}
        self._adj = {
            v: frozenset(self.other_end(e, v) for e in es) for v, es in self._inc.items()
        }

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._ends)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(self._ends)

    def edge_items(self) -> list[tuple[int, int, int]]:
        return [(e, u, v) for e, (u, v) in self._ends.items()]

    def endpoints(self, e: int) -> Edge:
        try:
            return self._ends[e]
        except KeyError:
            raise InputError(f"unknown edge id {e}") from None

    def has_vertex(self, v: int) -> bool:
        return v in self._inc

    def has_edge_id(self, e: int) -> bool:
        return e in self._ends

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise InputError(f"vertex {v} is not an endpoint of edge {e}")

    def incident(self, v: int) -> tuple[int, ...]:
        try:
            return self._inc[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def max_degree(self) -> int:
        return max((len(es) for es in self._inc.values()), default=0)

    def min_degree(self) -> int:
        return min((len(es) for es in self._inc.values()), default=0)

    def edge_degree(self, e: int) -> int:
        """Number of edges adjacent to ``e`` (d(x) + d(y) - 2)."""
        u, v = self.endpoints(e)
        return self.degree(u) + self.degree(v) - 2

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self.incident(u) if self.other_end(e, u) == v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def is_simple(self) -> bool:
        seen = set()
        for pair in self._ends.values():
            if pair in seen:
                return False
            seen.add(pair)
        return True

    def adjacent_edges(self, e: int) -> list[int]:
        """Edges at line-graph distance exactly one from ``e``."""
        u, v = self.endpoints(e)
        out = dict.fromkeys(self._inc[u])
        out.update(dict.fromkeys(self._inc[v]))
        out.pop(e, None)
        return list(out)

    # -- derived graphs --------------------------------------------------

    def remove_vertices(self, vs: Iterable[int]) -> "Multigraph":
        drop = set(vs)
        keep = [v for v in self._vertices if v not in drop]
        edges = {e: uv for e, uv in self._ends.items() if uv[0] not in drop and uv[1] not in drop}
        return Multigraph(edges=edges, vertices=keep)

    def induced(self, vs: Iterable[int]) -> "Multigraph":
        keep = set(vs)
        edges = {e: uv for e, uv in self._ends.items() if uv[0] in keep and uv[1] in keep}
        return Multigraph(edges=edges, vertices=keep)

    def without_isolated(self) -> "Multigraph":
        return self.induced(v for v in self._vertices if self._inc[v])

    def relabeled(self) -> tuple["Multigraph", dict[int, int], dict[int, int]]:
        """Dense copy; returns (graph, vertex map old->new, edge map old->new)."""
        vmap = {v: i for i, v in enumerate(self._vertices)}
        emap = {e: i for i, e in enumerate(sorted(self._ends))}
        edges = [(vmap[self._ends[e][0]], vmap[self._ends[e][1]]) for e in sorted(self._ends)]
        return Multigraph(len(vmap), edges), vmap, emap

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._ends == other._ends

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(sorted(self._ends.items()))))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.vertex_count}, m={self.edge_count})"


# -- line-graph distances ------------------------------------------------


def edge_ball(g: Multigraph, e: int, radius: int) -> dict[int, int]:
    """All edges within line-graph distance ``radius`` of ``e``, with distances."""
    g.endpoints(e)
    dist = {e: 0}
    frontier = [e]
    for d in range(1, radius + 1):
        nxt = []
        for f in frontier:
            for h in g.adjacent_edges(f):
                if h not in dist:
                    dist[h] = d
                    nxt.append(h)
        if not nxt:
            break
        frontier = nxt
    return dist


def edge_distance(g: Multigraph, e: int, e2: int, cap: int | None = None) -> Optional[int]:
    """Line-graph distance between two edges; ``None`` when unreachable.

    With ``cap`` the search stops at that depth and ``None`` also means
    "farther than cap".
    """
    g.endpoints(e)
    g.endpoints(e2)
    if e == e2:
        return 0
    dist = {e: 0}
    queue = deque([e])
    while queue:
        f = queue.popleft()
        d = dist[f]
        if cap is not None and d >= cap:
            continue
        for h in g.adjacent_edges(f):
            if h not in dist:
                if h == e2:
                    return d + 1
                dist[h] = d + 1
                queue.append(h)
    return None


def eta(g: Multigraph, e: int) -> int:
    """|(N(x) ∪ N(y)) \\ {x, y}| for the edge e = xy."""
    x, y = g.endpoints(e)
    return len((g.neighbors(x) | g.neighbors(y)) - {x, y})


def second_neighbors(g: Multigraph, e: int) -> list[int]:
    return [f for f, d in edge_ball(g, e, 2).items() if d == 2]


def intermediate_vertices(g: Multigraph, e: int) -> frozenset[int]:
    """Vertices adjacent to an end of ``e`` that touch an edge at distance 2."""
    x, y = g.endpoints(e)
    near = (g.neighbors(x) | g.neighbors(y)) - {x, y}
    out = set()
    for f in second_neighbors(g, e):
        for w in g.endpoints(f):
            if w in near:
                out.add(w)
    return frozenset(out)
