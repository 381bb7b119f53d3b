"""Random instances for each graph class, plus networkx conversions used as
an independent oracle in the tests."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from ttone.graph import Multigraph


def to_nx(g: Multigraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.endpoints(e) for e in g.edges)
    return h


def from_nx(h: nx.Graph) -> Multigraph:
    nodes = sorted(h.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    return Multigraph(len(nodes), sorted(tuple(sorted((pos[a], pos[b]))) for a, b in h.edges))


def nx_is_outerplanar(g: Multigraph) -> bool:
    h = to_nx(g)
    apex = ("apex",)
    h.add_edges_from((apex, v) for v in list(h.nodes))
    if not h.has_node(apex):
        h.add_node(apex)
    return nx.check_planarity(h)[0]


def line_distances(g: Multigraph) -> dict[tuple[int, int], int]:
    """All pairwise line-graph distances via networkx."""
    lg = nx.Graph()
    lg.add_nodes_from(g.edges)
    for e, f in combinations(g.edges, 2):
        if set(g.endpoints(e)) & set(g.endpoints(f)):
            lg.add_edge(e, f)
    return {(a, b): d for a, row in nx.all_pairs_shortest_path_length(lg) for b, d in row.items()}


def random_tree(rng: random.Random, max_edges: int = 40, dmin: int = 3, dmax: int = 6) -> Multigraph:
    while True:
        target = rng.randint(dmin, dmax)
        n = rng.randint(target + 1, max_edges + 1)
        deg = [0] * n
        edges = []
        # a hub of degree target first, then random attachments under the cap
        for i in range(1, target + 1):
            edges.append((0, i))
            deg[0] += 1
            deg[i] += 1
        for v in range(target + 1, n):
            choices = [u for u in range(v) if deg[u] < target]
            u = rng.choice(choices)
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
        perm = list(range(n))
        rng.shuffle(perm)
        g = Multigraph(n, [(perm[a], perm[b]) for a, b in edges])
        if dmin <= g.max_degree() <= dmax:
            return g


def random_bounded_degree(rng: random.Random, n: int, p: float, dmax: int) -> Multigraph:
    deg = [0] * n
    edges = []
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for a, b in pairs:
        if rng.random() < p and deg[a] < dmax and deg[b] < dmax:
            edges.append((a, b))
            deg[a] += 1
            deg[b] += 1
    return Multigraph(n, sorted(edges))


def random_apollonian(rng: random.Random, n: int, keep: float = 1.0) -> Multigraph:
    """Stacked triangulation on n >= 3 vertices, each edge kept with probability ``keep``."""
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges |= {(a, v), (b, v), (c, v)}
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    kept = sorted(e for e in edges if rng.random() < keep)
    return Multigraph(n, kept)


def random_maximal_outerplanar(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Edges of a random triangulated polygon on vertices 0..n-1."""
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}

    def split(poly: list[int]) -> None:
        if len(poly) <= 3:
            return
        i, j = sorted(rng.sample(range(len(poly)), 2))
        if j - i == 1 or (i == 0 and j == len(poly) - 1):
            # adjacent on the polygon; use an ear instead
            k = rng.randrange(len(poly))
            a, b = poly[k - 1], poly[(k + 1) % len(poly)]
            edges.add((min(a, b), max(a, b)))
            split(poly[:k] + poly[k + 1:])
            return
        a, b = poly[i], poly[j]
        edges.add((min(a, b), max(a, b)))
        split(poly[i:j + 1])
        split(poly[j:] + poly[:i + 1])

    split(list(range(n)))
    return sorted(edges)


def random_outerplanar(rng: random.Random, n: int, keep: float = 0.8, pendants: int = 3) -> Multigraph:
    edges = [e for e in random_maximal_outerplanar(rng, n) if rng.random() < keep]
    m = n
    for _ in range(pendants):
        edges.append((rng.randrange(m), m))
        m += 1
    return Multigraph(m, edges)


def random_fan_heavy_outerplanar(rng: random.Random, n: int) -> Multigraph:
    """Outerplanar with one high-degree vertex: a fan plus random pendant paths."""
    edges = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1) if rng.random() < 0.8]
    m = n
    for _ in range(rng.randint(0, 3)):
        edges.append((rng.randrange(m), m))
        m += 1
    return Multigraph(m, edges)


def random_subcubic(rng: random.Random, n: int, p: float) -> Multigraph:
    return random_bounded_degree(rng, n, p, 3)


def truncate(g: Multigraph) -> Multigraph:
    """Replace every degree-3 vertex by a triangle (result is claw-free)."""
    port: dict[tuple[int, int], int] = {}
    nxt = 0
    edges = []
    vid: dict[int, int] = {}
    for v in g.vertices:
        if g.degree(v) == 3:
            tri = [nxt, nxt + 1, nxt + 2]
            nxt += 3
            edges += [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])]
            for i, e in enumerate(sorted(g.incident(v))):
                port[(v, e)] = tri[i]
        else:
            vid[v] = nxt
            nxt += 1
            for e in g.incident(v):
                port[(v, e)] = vid[v]
    for e, u, v in g.edge_items():
        edges.append((port[(u, e)], port[(v, e)]))
    return Multigraph(nxt, edges)


def insert_diamonds(rng: random.Random, g: Multigraph, count: int) -> Multigraph:
    """Replace ``count`` random edges uv, not on a triangle, by u - diamond - v."""
    edges = [g.endpoints(e) for e in g.edges]
    n = g.vertex_count
    for _ in range(count):
        nb = {}
        for a, b in edges:
            nb.setdefault(a, set()).add(b)
            nb.setdefault(b, set()).add(a)
        open_edges = [i for i, (a, b) in enumerate(edges) if not nb[a] & nb[b]]
        if not open_edges:
            break
        u, v = edges.pop(rng.choice(open_edges))
        a, b, c, d = n, n + 1, n + 2, n + 3
        n += 4
        edges += [(u, a), (a, b), (a, c), (b, c), (b, d), (c, d), (d, v)]
    return Multigraph(n, edges)


def random_cubic(rng: random.Random, orders=(4, 6, 8, 10)) -> Multigraph:
    from ttone.search import enumerate_cubic

    return rng.choice(list(enumerate_cubic(rng.choice(orders))))


def random_clawfree_subcubic(rng: random.Random) -> Multigraph:
    kind = rng.randrange(5)
    base = random_subcubic(rng, rng.randint(4, 10), 0.5)
    if kind == 0:
        g = truncate(random_cubic(rng))
    elif kind == 4:
        g = insert_diamonds(rng, truncate(random_cubic(rng)), rng.randint(1, 2))
    elif kind == 1:
        g = insert_diamonds(rng, truncate(base), rng.randint(1, 3))
    elif kind == 2:
        # diamond necklace: diamonds joined in a ring, plus a K4 component sometimes
        k = rng.randint(2, 5)
        edges = []
        for i in range(k):
            a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
            edges += [(a, b), (a, c), (b, c), (b, d), (c, d), (d, (4 * i + 4) % (4 * k))]
        n = 4 * k
        if rng.random() < 0.5:
            edges += [(n + i, n + j) for i, j in combinations(range(4), 2)]
            n += 4
        g = Multigraph(n, edges)
    else:
        g = insert_diamonds(rng, truncate(base), 1)
        # drop a few edges; deleting can create claws, so filter below
        keep = [g.endpoints(e) for e in g.edges if rng.random() < 0.9]
        g = Multigraph(g.vertex_count, keep)
    return g


def random_2degenerate_subcubic(rng: random.Random, n: int) -> Multigraph:
    deg = [0] * n
    edges = []
    for v in range(1, n):
        room = [u for u in range(v) if deg[u] < 3]
        k = min(len(room), rng.choice((1, 2, 2, 2)))
        for u in rng.sample(room, k):
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    perm = list(range(n))
    rng.shuffle(perm)
    return Multigraph(n, [(perm[a], perm[b]) for a, b in edges])


def random_sp_subcubic(rng: random.Random, ops: int) -> Multigraph:
    """Series-parallel subcubic multigraph from a digon by random operations."""
    ends = {0: (0, 1), 1: (0, 1)}
    deg = {0: 2, 1: 2}
    nxt_v, nxt_e = 2, 2
    for _ in range(ops):
        eids = sorted(ends)
        if rng.random() < 0.6:
            e = rng.choice(eids)
            u, v = ends.pop(e)
            x = nxt_v
            nxt_v += 1
            deg[x] = 2
            ends[nxt_e] = (u, x)
            ends[nxt_e + 1] = (x, v)
            nxt_e += 2
        else:
            cands = [e for e in eids if deg[ends[e][0]] < 3 and deg[ends[e][1]] < 3]
            if not cands:
                continue
            u, v = ends[rng.choice(cands)]
            ends[nxt_e] = (u, v)
            nxt_e += 1
            deg[u] += 1
            deg[v] += 1
    verts = sorted(deg)
    pos = {v: i for i, v in enumerate(verts)}
    return Multigraph(len(verts), [(pos[a], pos[b]) for _, (a, b) in sorted(ends.items())])


def random_subcubic_outerplanar(rng: random.Random, max_edges: int = 24) -> Multigraph:
    """Blocks that are cycles with random non-crossing chords between
    degree-2 vertices, joined by bridges and pendant paths, all subcubic."""
    edges: list[tuple[int, int]] = []
    deg: dict[int, int] = {}
    n = 0

    def add(a, b):
        edges.append((a, b))
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1

    blocks = rng.randint(1, 3)
    for bi in range(blocks):
        size = rng.randint(3, 8)
        cyc = list(range(n, n + size))
        n += size
        for i in range(size):
            add(cyc[i], cyc[(i + 1) % size])
        # chords: random non-crossing set on the polygon, one per vertex at most
        chords = []
        for _ in range(rng.randint(0, size // 2)):
            i, j = sorted(rng.sample(range(size), 2))
            if j - i < 2 or (i == 0 and j == size - 1):
                continue
            if deg[cyc[i]] >= 3 or deg[cyc[j]] >= 3:
                continue
            if any(a < i < b < j or i < a < j < b for a, b in chords):
                continue
            chords.append((i, j))
            add(cyc[i], cyc[j])
        if bi > 0:
            free_new = [v for v in cyc if deg[v] < 3]
            free_old = [v for v in range(n - size) if deg[v] < 3]
            if free_new and free_old:
                add(rng.choice(free_old), rng.choice(free_new))
    for _ in range(rng.randint(0, 3)):
        free = [v for v in range(n) if deg.get(v, 0) < 3]
        if not free:
            break
        add(rng.choice(free), n)
        n += 1
    while len(edges) > max_edges:
        edges.pop()
    return Multigraph(n, edges)


def random_partial_instance(rng: random.Random):
    """(graph, valid partial 2-tone coloring, uncolored edge with >= 3 free colors)."""
    from ttone.coloring import PartialColoring, candidate_labels, free_colors, label_conflicts

    while True:
        g = random_bounded_degree(rng, rng.randint(4, 10), rng.uniform(0.2, 0.6), rng.randint(2, 5))
        if g.edge_count < 2:
            continue
        k = rng.randint(5, 12)
        c = PartialColoring(2, k)
        order = list(g.edges)
        rng.shuffle(order)
        target = order.pop()
        for e in order:
            if rng.random() < 0.3:
                continue
            labs = candidate_labels(free_colors(g, c, e))
            rng.shuffle(labs)
            for lab in labs:
                if not label_conflicts(g, c, e, lab):
                    c = c.with_label(e, lab)
                    break
        if len(free_colors(g, c, target)) >= 3:
            return g, c, target
