"""Core graph/coloring/path type behavior."""
import pytest
from hypothesis import given, strategies as st

from dipath_ramsey import (
    ColoringError,
    DirectedPath,
    EdgeColoring,
    GraphShapeError,
    OrientedGraph,
    Tournament,
    VertexColoring,
    complete_symmetric,
    is_tournament,
    transitive_tournament,
)


def test_rejects_self_loop():
    with pytest.raises(GraphShapeError):
        OrientedGraph(3, [(1, 1)])


def test_rejects_out_of_range():
    with pytest.raises(GraphShapeError):
        OrientedGraph(2, [(0, 2)])


def test_rejects_antiparallel_when_oriented():
    with pytest.raises(GraphShapeError):
        OrientedGraph(2, [(0, 1), (1, 0)])
    g = OrientedGraph(2, [(0, 1), (1, 0)], allow_antiparallel=True)
    assert g.edge_count == 2


def test_duplicate_edges_collapse():
    g = OrientedGraph(3, [(0, 1), (0, 1), (1, 2)])
    assert g.edge_count == 2


def test_edges_canonical_order():
    g = OrientedGraph(4, [(3, 0), (0, 2), (0, 1), (2, 1)])
    assert g.edges() == [(0, 1), (0, 2), (2, 1), (3, 0)]


def test_subgraph_relabels_ascending():
    g = OrientedGraph(5, [(4, 2), (2, 0), (0, 4), (1, 3)])
    sub, back = g.subgraph([4, 0, 2])
    assert back == [0, 2, 4]
    assert sub.n == 3
    assert set(sub.edges()) == {(2, 1), (1, 0), (0, 2)}


def test_complete_symmetric_counts():
    g = complete_symmetric(4)
    assert g.edge_count == 12
    assert g.allow_antiparallel
    assert all(g.has_edge(u, v) for u in range(4) for v in range(4) if u != v)


def test_tournament_wrapper_validates():
    assert is_tournament(transitive_tournament(5))
    with pytest.raises(GraphShapeError):
        Tournament(OrientedGraph(3, [(0, 1)]))


def test_directed_path_basics():
    assert DirectedPath(()).length == 0
    assert DirectedPath((7,)).length == 0
    p = DirectedPath((0, 1, 2))
    assert p.length == 2
    assert p.edges() == [(0, 1), (1, 2)]
    with pytest.raises(GraphShapeError):
        DirectedPath((0, 1, 0))


def test_path_validity():
    g = OrientedGraph(3, [(0, 1), (1, 2)])
    assert DirectedPath((0, 1, 2)).is_valid_in(g)
    assert not DirectedPath((2, 1)).is_valid_in(g)
    assert not DirectedPath((0, 5)).is_valid_in(g)


def test_coloring_total_and_classes():
    g = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
    col = EdgeColoring(2, {(0, 1): 1, (1, 2): 1, (2, 0): 2})
    col.validate_total(g)
    red = col.class_graph(g, 1)
    assert set(red.edges()) == {(0, 1), (1, 2)}
    missing = EdgeColoring(2, {(0, 1): 1})
    with pytest.raises(ColoringError):
        missing.validate_total(g)


def test_coloring_rejects_bad_color():
    with pytest.raises(ColoringError):
        EdgeColoring(2, {(0, 1): 3})
    with pytest.raises(ColoringError):
        EdgeColoring(2, {(0, 1): 0})


def test_vertex_coloring_properness():
    g = OrientedGraph(3, [(0, 1), (1, 2)])
    ok = VertexColoring((1, 2, 1))
    assert ok.is_proper(g)
    bad = VertexColoring((1, 1, 2))
    assert not bad.is_proper(g)
    assert ok.classes() == [[0, 2], [1]]


@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_random_tournament_shape(n, seed):
    from dipath_ramsey import random_tournament
    t = random_tournament(n, seed)
    assert is_tournament(t.underlying)
    assert t.underlying.edge_count == n * (n - 1) // 2
