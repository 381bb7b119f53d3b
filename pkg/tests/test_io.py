import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import from_nx, to_nx
from ttone import catalog as cat
from ttone.coloring import PartialColoring
from ttone.errors import ParseError, UnsupportedInput
from ttone.graph import Multigraph
from ttone.io import (
    dump_coloring, from_edgelist, from_graph6, load_coloring, parse_graph, read_graph6_stream,
    serialize_graph, to_edgelist, to_graph6,
)


def test_k4_graph6():
    g = from_graph6("C~")
    assert g.vertex_count == 4 and g.edge_count == 6
    assert to_graph6(cat.complete(4)) == "C~"


def test_matches_networkx_encoder():
    for g in (cat.petersen(), cat.fig2(), cat.path(7), cat.dodecahedron(), Multigraph(1, [])):
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert to_graph6(g) == ref


@settings(max_examples=100)
@given(st.integers(0, 70), st.data())
def test_graph6_round_trip_against_networkx(n, data):
    p = data.draw(st.floats(0, 1))
    h = nx.gnp_random_graph(n, p, seed=data.draw(st.integers(0, 10**6)))
    s = nx.to_graph6_bytes(h, header=False).decode().strip()
    g = from_graph6(s)
    assert nx.utils.graphs_equal(to_nx(g), nx.from_graph6_bytes(s.encode())) or n == 0
    assert to_graph6(g) == s


def test_header_and_stream():
    assert from_graph6(">>graph6<<C~").edge_count == 6
    gs = list(read_graph6_stream(["# comment", "", "C~", "Bw", "Bg"]))
    assert [g.edge_count for g in gs] == [6, 3, 2]


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f", "A~"])
def test_graph6_errors(bad):
    with pytest.raises(ParseError):
        from_graph6(bad)


def test_stream_error_reports_line():
    with pytest.raises(ParseError) as info:
        list(read_graph6_stream(["C~", "C"]))
    assert info.value.line == 2


def test_multigraph_has_no_graph6():
    with pytest.raises(UnsupportedInput):
        to_graph6(Multigraph(2, [(0, 1), (0, 1)]))


def test_edgelist_parallel_pair():
    g = from_edgelist("0 1\n1 2\n1 2\n")
    assert g.edge_count == 3 and len(g.edges_between(1, 2)) == 2


def test_edgelist_round_trip():
    for g in (cat.petersen(), Multigraph(5, {4: (0, 1), 9: (0, 1), 2: (1, 3)})):
        assert from_edgelist(to_edgelist(g)) == g
    # sparse vertex ids are written densely
    g = Multigraph(edges={4: (0, 1), 9: (0, 1), 2: (1, 3)}, vertices=[0, 1, 3, 8])
    assert from_edgelist(to_edgelist(g)) == g.relabeled()[0]


def test_edgelist_errors():
    for bad in ("0\n", "a b\n", "0 0\n", "1 2 3 4\n"):
        with pytest.raises(ParseError):
            from_edgelist(bad)


def test_parse_serialize_dispatch():
    g = cat.fig2()
    for fmt in ("graph6", "edgelist"):
        assert parse_graph(serialize_graph(g, fmt), fmt).edge_count == 15


def test_coloring_document_round_trip():
    c = PartialColoring(2, 9, {0: {1, 2}, 5: {3, 9}})
    assert load_coloring(dump_coloring(c, {"note": "x"})) == c


@pytest.mark.parametrize("text", ["[]", "{", '{"t": 2}', '{"t": 2, "k": 3, "labels": {"0": [1]}}'])
def test_bad_coloring_documents(text):
    with pytest.raises(Exception) as info:
        load_coloring(text)
    assert isinstance(info.value, (ParseError, ValueError))


def test_from_nx_helper_consistent():
    g = from_nx(nx.petersen_graph())
    assert g.edge_count == 15 and g.max_degree() == 3
