"""Outerplane embeddings, bounded faces, weak duals and pendant faces.

Every biconnected block with at least three vertices of an outerplanar graph
has a unique Hamiltonian cycle bounding the outer face; all remaining block
edges are non-crossing chords.  The cycle is recovered by suppressing
degree-2 vertices down to a triangle and re-inserting them, after which the
result is checked directly (Hamiltonian, chords pairwise non-crossing), so a
non-outerplanar block can never slip through.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError, UnsupportedInput
from .graph import Multigraph


@dataclass(frozen=True)
class OuterBlock:
    outer_cycle: tuple[int, ...]
    chords: frozenset[int]


@dataclass(frozen=True)
class Face:
    index: int
    cycle: tuple[int, ...]
    edges: tuple[int, ...]
    block: int


@dataclass(frozen=True)
class OuterEmbedding:
    blocks: tuple[OuterBlock, ...]
    bridge_edges: frozenset[int]
    faces: tuple[Face, ...]
    weak_dual: dict[int, frozenset[int]] = field(hash=False)

    def weak_dual_is_forest(self) -> bool:
        parent = {f.index: f.index for f in self.faces}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, nbrs in self.weak_dual.items():
            for b in nbrs:
                if a < b:
                    ra, rb = find(a), find(b)
                    if ra == rb:
                        return False
                    parent[ra] = rb
        return True


@dataclass(frozen=True)
class PendantFace:
    face: Face
    cycle: tuple[int, ...]  # rotated: v1 has degree 3; v_l too when two
    degree3: int  # 1 or 2


def biconnected_blocks(g: Multigraph) -> list[list[int]]:
    """Edge sets of the biconnected blocks (iterative Hopcroft-Tarjan)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[list[int]] = []
    edge_stack: list[int] = []
    counter = 0
    for root in g.vertices:
        if root in index or not g.incident(root):
            continue
        index[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(g.incident(root)))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e == via:
                    continue
                w = g.other_end(e, v)
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(e)
                    stack.append((w, e, iter(g.incident(w))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= index[p]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == via:
                            break
                    blocks.append(sorted(block))
    return blocks


def _hamiltonian_outer_cycle(g: Multigraph, edges: list[int]) -> Optional[list[int]]:
    adj: dict[int, set[int]] = {}
    for e in edges:
        u, v = g.endpoints(e)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    stack = []
    while len(adj) > 3:
        deg2 = [x for x in adj if len(adj[x]) == 2]
        if not deg2:
            return None
        v = min(deg2)
        a, b = sorted(adj.pop(v))
        adj[a].discard(v)
        adj[b].discard(v)
        adj[a].add(b)
        adj[b].add(a)
        stack.append((v, a, b))
    if len(adj) != 3 or any(len(n) != 2 for n in adj.values()):
        return None
    a = min(adj)
    b, c = sorted(adj[a])
    cycle = [a, b, c]
    for v, a, b in reversed(stack):
        i, j = cycle.index(a), cycle.index(b)
        n = len(cycle)
        if (i + 1) % n == j:
            cycle.insert(i + 1, v)
        elif (j + 1) % n == i:
            cycle.insert(j + 1, v)
        else:
            return None
    return cycle


def _crossing(pos: dict[int, int], c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a, b = sorted((pos[c1[0]], pos[c1[1]]))
    c, d = sorted((pos[c2[0]], pos[c2[1]]))
    return a < c < b < d or c < a < d < b


def _split_faces(cycle: list[int], chord_pairs: list[tuple[int, int]]) -> list[list[int]]:
    faces = []
    pending = [(list(cycle), list(chord_pairs))]
    while pending:
        poly, chords = pending.pop()
        if not chords:
            faces.append(poly)
            continue
        (a, b), rest = chords[0], chords[1:]
        i, j = sorted((poly.index(a), poly.index(b)))
        left = poly[i : j + 1]
        right = poly[j:] + poly[: i + 1]
        lset, rset = set(left), set(right)
        pending.append((right, [c for c in rest if c[0] in rset and c[1] in rset]))
        pending.append((left, [c for c in rest if c[0] in lset and c[1] in lset]))
    return faces


def _canonical_cycle(cyc: list[int]) -> tuple[int, ...]:
    i = cyc.index(min(cyc))
    rot = cyc[i:] + cyc[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def outer_embedding(g: Multigraph) -> Optional[OuterEmbedding]:
    """Outerplane embedding of a simple graph, or ``None`` if not outerplanar.

    Disconnected inputs are accepted and embedded component by component.
    """
    if not g.is_simple():
        raise UnsupportedInput("outer_embedding requires a simple graph")
    pair_to_edge = {g.endpoints(e): e for e in g.edges}

    def edge_of(u, v):
        return pair_to_edge[(u, v) if u < v else (v, u)]

    blocks = []
    bridges = set()
    faces: list[Face] = []
    chord_faces: dict[int, list[int]] = {}
    for bedges in biconnected_blocks(g):
        if len(bedges) == 1:
            bridges.add(bedges[0])
            continue
        cycle = _hamiltonian_outer_cycle(g, bedges)
        if cycle is None:
            return None
        n = len(cycle)
        cycle_edges = {edge_of(cycle[i], cycle[(i + 1) % n]) for i in range(n)}
        if not cycle_edges <= set(bedges):
            return None
        chords = [e for e in bedges if e not in cycle_edges]
        pos = {v: i for i, v in enumerate(cycle)}
        chord_pairs = [g.endpoints(e) for e in chords]
        for i in range(len(chord_pairs)):
            for j in range(i + 1, len(chord_pairs)):
                if _crossing(pos, chord_pairs[i], chord_pairs[j]):
                    return None
        bi = len(blocks)
        blocks.append(OuterBlock(tuple(_canonical_cycle(cycle)), frozenset(chords)))
        chord_set = set(chords)
        for poly in sorted(_canonical_cycle(p) for p in _split_faces(cycle, chord_pairs)):
            fe = tuple(edge_of(poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly)))
            face = Face(len(faces), poly, fe, bi)
            faces.append(face)
            for e in fe:
                if e in chord_set:
                    chord_faces.setdefault(e, []).append(face.index)
    dual: dict[int, set[int]] = {f.index: set() for f in faces}
    for fs in chord_faces.values():
        a, b = fs
        dual[a].add(b)
        dual[b].add(a)
    return OuterEmbedding(
        tuple(blocks),
        frozenset(bridges),
        tuple(faces),
        {k: frozenset(v) for k, v in dual.items()},
    )


def is_outerplanar(g: Multigraph) -> bool:
    return outer_embedding(g) is not None


def find_pendant_face(g: Multigraph, emb: OuterEmbedding) -> Optional[PendantFace]:
    """A weak-dual leaf whose cycle has one degree-3 vertex or two consecutive ones.

    Isolated faces of the weak dual (cycle blocks) count as leaves.
    """
    active = [v for v in g.vertices if g.degree(v) > 0]
    if any(g.degree(v) > 3 for v in active):
        raise InputError("find_pendant_face requires a subcubic graph")
    if any(g.degree(v) < 2 for v in active):
        raise InputError("find_pendant_face requires minimum degree two")
    if len(emb.faces) < 2:
        raise InputError("find_pendant_face requires at least two bounded faces")
    for face in emb.faces:
        if len(emb.weak_dual[face.index]) > 1:
            continue
        cyc = list(face.cycle)
        n = len(cyc)
        heavy = [i for i, v in enumerate(cyc) if g.degree(v) == 3]
        if len(heavy) == 1:
            i = heavy[0]
            return PendantFace(face, tuple(cyc[i:] + cyc[:i]), 1)
        if len(heavy) == 2:
            i, j = heavy
            if (i + 1) % n == j:
                start = j  # v1 = cyc[j], v_l = cyc[i]
            elif (j + 1) % n == i:
                start = i
            else:
                continue
            return PendantFace(face, tuple(cyc[start:] + cyc[:start]), 2)
    return None
