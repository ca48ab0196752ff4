import io

import networkx as nx
import pytest

from cubicdecomp.graph import (
    BadVertexId,
    MalformedGraph6,
    NotConnected,
    NotCubic,
    NotSimple,
    from_edge_list,
    induced_edge_set,
    k4,
    parse_edge_list_text,
    parse_graph6,
    petersen,
    read_graph6_lines,
    write_edge_list_text,
    write_graph6,
)

K4_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_k4_from_pairs():
    g = from_edge_list(4, K4_PAIRS)
    assert g.n == 4 and len(g.edges) == 6
    assert g == k4()


def test_missing_edge_is_not_cubic():
    with pytest.raises(NotCubic):
        from_edge_list(4, K4_PAIRS[:-1])


@pytest.mark.parametrize("pairs, err", [
    (K4_PAIRS + [(0, 1)], NotSimple),
    ([(0, 0)] + K4_PAIRS[1:], NotSimple),
    (K4_PAIRS[:-1] + [(2, 4)], BadVertexId),
    (K4_PAIRS[:-1] + [(2, -1)], BadVertexId),
])
def test_bad_edge_lists(pairs, err):
    with pytest.raises(err):
        from_edge_list(4, pairs)


def test_two_disjoint_k4s_are_not_connected():
    pairs = K4_PAIRS + [(u + 4, v + 4) for u, v in K4_PAIRS]
    with pytest.raises(NotConnected):
        from_edge_list(8, pairs)


def test_validation_is_deterministic():
    pairs = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5)]
    errors = {str(pytest.raises(NotCubic, from_edge_list, 6, pairs).value) for _ in range(3)}
    assert len(errors) == 1


def test_petersen_shape():
    g = petersen()
    assert g.n == 10 and len(g.edges) == 15
    assert all(len(g.neighbors(v)) == 3 for v in g.vertices)
    h = to_nx(g)
    assert nx.is_connected(h) and nx.girth(h) == 5


def test_graph6_k4():
    assert parse_graph6("C~") == k4()
    assert write_graph6(k4()) == "C~"


def test_graph6_header_is_accepted():
    assert parse_graph6(">>graph6<<C~") == k4()


def test_graph6_not_cubic():
    with pytest.raises(NotCubic):
        parse_graph6("C^")


@pytest.mark.parametrize("text", ["", "   ", "C", "C~~", "C\x7f", "~"])
def test_graph6_malformed(text):
    with pytest.raises(MalformedGraph6):
        parse_graph6(text)


def test_graph6_matches_networkx(census):
    for graphs in census.values():
        for g in graphs:
            ours = write_graph6(g)
            theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            assert ours == theirs
            assert nx.utils.edges_equal(nx.from_graph6_bytes(ours.encode()).edges, g.edges)


def test_graph6_round_trip(census):
    for graphs in census.values():
        for g in graphs:
            assert parse_graph6(write_graph6(g)) == g


def test_petersen_round_trip_is_label_identical():
    g = petersen()
    text = write_graph6(g)
    assert text[0] == chr(63 + 10)
    assert parse_graph6(text).edges == g.edges


def test_read_graph6_lines_keeps_going():
    got = list(read_graph6_lines(io.StringIO("C~\n\nbad!\nC^\nC~\n")))
    assert [s for s, _ in got] == ["C~", "bad!", "C^", "C~"]
    assert got[0][1] == k4() and got[3][1] == k4()
    assert isinstance(got[1][1], MalformedGraph6)
    assert isinstance(got[2][1], NotCubic)


def test_edge_list_text_round_trip():
    g = petersen()
    assert parse_edge_list_text(write_edge_list_text(g)) == g


def test_edge_list_text_count_mismatch():
    with pytest.raises(Exception):
        parse_edge_list_text("4 6\n0 1\n")


def test_induced_edge_set():
    assert induced_edge_set(k4(), {0, 1, 2}) == {(0, 1), (0, 2), (1, 2)}
    assert induced_edge_set(petersen(), set()) == frozenset()
    assert induced_edge_set(petersen(), range(5)) == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
