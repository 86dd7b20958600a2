import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domcount.graph import (
    Graph,
    VertexSet,
    build_graph,
    closed_neighborhood,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_dominating,
    parse_edge_list,
    path_graph,
    row_zero_profile,
    star_graph,
    to_edge_list,
)

from conftest import graphs


def test_build_p3_rows():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.rows == (0b011, 0b111, 0b110)


def test_build_empty_two_vertices():
    g = build_graph(2, [])
    assert g.rows == (0b01, 0b10)


def test_build_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        build_graph(3, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(ValueError, match="out of range"):
        build_graph(3, [(0, 3)])


def test_build_rejects_bad_n():
    with pytest.raises(ValueError):
        build_graph(0, [])
    with pytest.raises(ValueError):
        build_graph(4097, [])


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_closed_neighborhood_examples():
    p3 = path_graph(3)
    assert set(closed_neighborhood(p3, 1).members()) == {0, 1, 2}
    k4 = complete_graph(4)
    assert set(closed_neighborhood(k4, 0).members()) == {0, 1, 2, 3}
    e5 = empty_graph(5)
    assert set(closed_neighborhood(e5, 2).members()) == {2}
    with pytest.raises(ValueError):
        closed_neighborhood(p3, 3)


def test_is_dominating_examples():
    p3 = path_graph(3)
    assert is_dominating(p3, [1])
    assert not is_dominating(empty_graph(3), [0, 1])
    assert is_dominating(empty_graph(3), [0, 1, 2])
    with pytest.raises(ValueError):
        is_dominating(p3, [5])


def test_row_zero_profile_examples():
    assert row_zero_profile(complete_graph(5)).zeros_per_row == (0,) * 5
    prof6 = row_zero_profile(empty_graph(6))
    assert prof6.zeros_per_row == (5,) * 6
    assert prof6.z_max == 5
    p3 = row_zero_profile(path_graph(3))
    assert p3.zeros_per_row == (1, 0, 1)
    assert p3.z_max == 1
    assert p3.argmax == 0


def test_serialization_canonical():
    g = build_graph(5, [(3, 4), (0, 1), (1, 0)])
    assert to_edge_list(g) == "5 2\n0 1\n3 4\n"


def test_parse_comments_and_blanks():
    text = "# header comment\n3 2\n\n0 1\n# middle\n1 2\n"
    assert parse_edge_list(text) == path_graph(3)


def test_parse_errors():
    with pytest.raises(ValueError, match="empty"):
        parse_edge_list("# nothing\n")
    with pytest.raises(ValueError, match="header"):
        parse_edge_list("3\n")
    with pytest.raises(ValueError, match="edge lines"):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ValueError, match="edge line"):
        parse_edge_list("2 1\n0 1 2\n")
    with pytest.raises(ValueError, match="self-loop"):
        parse_edge_list("2 1\n1 1\n")


def test_vertex_set_basics():
    s = VertexSet.of(3, 1, 5)
    assert list(s.members()) == [1, 3, 5]
    assert len(s) == 3
    assert 3 in s and 0 not in s
    assert len(s | VertexSet.of(0)) == 4
    with pytest.raises(ValueError):
        VertexSet.of(-1)


def test_graph_equality_and_hash():
    a = cycle_graph(5)
    b = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != path_graph(5)


def test_from_adjacency_requires_symmetry():
    m = np.zeros((3, 3), dtype=bool)
    m[0, 1] = True
    with pytest.raises(ValueError, match="symmetric"):
        Graph.from_adjacency(m)


def test_word_boundary_sizes():
    # n at and around multiples of 64 exercises the packed representation.
    for n in (63, 64, 65, 128, 130):
        g = cycle_graph(n)
        assert g.words.shape == (n, (n + 63) // 64)
        assert g.edge_count == n
        assert is_dominating(g, range(0, n, 3))
        assert parse_edge_list(to_edge_list(g)) == g


@settings(max_examples=60)
@given(graphs(max_n=16))
def test_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


@settings(max_examples=60)
@given(graphs(max_n=10), st.data())
def test_superset_closure(g, data):
    bits = data.draw(st.integers(min_value=0, max_value=g.full_mask))
    extra = data.draw(st.integers(min_value=0, max_value=g.full_mask))
    if is_dominating(g, VertexSet(bits)):
        assert is_dominating(g, VertexSet(bits | extra))


@settings(max_examples=60)
@given(graphs(max_n=16))
def test_zeros_plus_degree_identity(g):
    prof = row_zero_profile(g)
    for v in range(g.n):
        assert prof.zeros_per_row[v] + g.degree(v) + 1 == g.n


@settings(max_examples=60)
@given(graphs(max_n=16))
def test_diagonal_and_symmetry_invariants(g):
    for v in range(g.n):
        assert v in closed_neighborhood(g, v)
        for u in range(g.n):
            assert ((g.rows[v] >> u) & 1) == ((g.rows[u] >> v) & 1)
        assert g.rows[v] >> g.n == 0


@settings(max_examples=40)
@given(graphs(max_n=10), st.data())
def test_zero_column_subsets_do_not_dominate(g, data):
    prof = row_zero_profile(g)
    v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    zero_bits = g.full_mask & ~g.rows[v]
    if zero_bits == 0:
        return
    subset = data.draw(st.integers(min_value=1, max_value=zero_bits)) & zero_bits
    if subset:
        assert not is_dominating(g, VertexSet(subset))


def test_full_vertex_set_dominates():
    for g in (path_graph(4), empty_graph(6), star_graph(5)):
        assert is_dominating(g, range(g.n))
