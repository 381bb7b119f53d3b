"""Property tests over hypothesis-drawn constructions."""

import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import from_nx, random_sp_subcubic, random_subcubic_outerplanar
from ttone.coloring import verify
from ttone.colorers import (
    auto_color, color_general, color_sp_subcubic, color_subcubic_outerplanar, color_tree, replay,
)
from ttone.exact import exact_index
from ttone.graph import Multigraph
from ttone.io import from_graph6, to_graph6
from ttone.search import canonical_graph6


@st.composite
def trees(draw, max_n=25):
    n = draw(st.integers(4, max_n))
    code = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return from_nx(nx.from_prufer_sequence(code))


@settings(max_examples=150)
@given(trees())
def test_tree_colorer_uses_twice_max_degree(g):
    if g.max_degree() < 3:
        return
    out = color_tree(g)
    assert out.k == 2 * g.max_degree()
    assert verify(g, out.coloring) == [] and out.coloring.is_complete(g)


@settings(max_examples=40)
@given(trees(max_n=10))
def test_tree_index_is_exact(g):
    if g.max_degree() < 3:
        return
    assert exact_index(g).index == 2 * g.max_degree()


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(0, 30))
def test_sp_colorer_on_drawn_sequences(seed, ops):
    g = random_sp_subcubic(random.Random(seed), ops)
    out = color_sp_subcubic(g)
    assert out.k == 9 and verify(g, out.coloring) == []
    assert replay(out.trace, 2, 9) == out.coloring


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1))
def test_subcubic_outerplanar_colorer(seed):
    g = random_subcubic_outerplanar(random.Random(seed))
    out = color_subcubic_outerplanar(g)
    assert out.k <= 8 and verify(g, out.coloring) == [] and out.coloring.is_complete(g)
    assert not out.fallback_used


@st.composite
def simple_graphs(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Multigraph(n, sorted(chosen))


@settings(max_examples=120)
@given(simple_graphs())
def test_general_colorer_any_simple_graph(g):
    if g.max_degree() < 2:
        return
    out = color_general(g)
    assert out.k == 6 * g.max_degree() - 4 and verify(g, out.coloring) == []


@settings(max_examples=120)
@given(simple_graphs(8))
def test_auto_color_never_beats_the_exact_index(g):
    out = auto_color(g)
    assert verify(g, out.coloring) == [] and out.coloring.is_complete(g)
    if g.edge_count and g.edge_count <= 10:
        assert exact_index(g).index <= out.k


@settings(max_examples=150)
@given(simple_graphs(9), st.randoms(use_true_random=False))
def test_canonical_form_ignores_labeling(g, rnd):
    perm = list(g.vertices)
    rnd.shuffle(perm)
    h = Multigraph(g.vertex_count, [(perm[u], perm[v]) for _, u, v in g.edge_items()])
    assert canonical_graph6(g) == canonical_graph6(h)
    back = from_graph6(to_graph6(g))  # graph6 numbers edges column by column
    assert sorted(back.endpoints(e) for e in back.edges) == sorted(g.endpoints(e) for e in g.edges)
