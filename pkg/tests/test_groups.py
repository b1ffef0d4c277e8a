import pytest

from critical.groups import (
    critical_group, f_count, integer_laplacian, matching_group_formula, reduced_laplacian, spanning_tree_count,
)
from graphs.components.constructions import complete, cone, cycle, disjoint_union, matching_removed, path, star
from graphs.graph import Graph
from utils.errors import DisconnectedGraphError, GraphArgumentError


def test_complete_graph_group():
    group = critical_group(complete(4))
    assert group.factors.diag == [1, 4, 4]
    assert group.base == 3
    assert group.render() == "Z_4 x Z_4"
    assert group.f(1) == 1


@pytest.mark.parametrize("G, trees", [
    (complete(4), 16),
    (cycle(5), 5),
    (path(4), 1),
    (Graph(2, [(0, 1, 3)]), 3),
    (disjoint_union(complete(2), complete(2)), 0),
])
def test_spanning_tree_count(G: Graph, trees: int):
    assert spanning_tree_count(G) == trees


def test_cycle_group_is_cyclic():
    assert critical_group(cycle(5)).factors.diag == [1, 1, 1, 5]
    assert critical_group(path(4)).render() == "0"


def test_base_vertex_does_not_matter():
    G = matching_removed(5, 1)
    groups = {tuple(critical_group(G, s).factors.diag) for s in range(G.n)}
    assert len(groups) == 1


def test_multigraph_laplacian():
    G = Graph(3, [(0, 1, 2), (1, 2)])
    assert integer_laplacian(G) == [[2, -2, 0], [-2, 3, -1], [0, -1, 1]]
    assert reduced_laplacian(G, 0) == [[3, -1], [-1, 1]]
    with pytest.raises(GraphArgumentError):
        reduced_laplacian(G, 3)


@pytest.mark.parametrize("n, k", [(4, 1), (5, 1), (5, 2), (6, 1), (6, 2), (7, 3), (8, 3)])
def test_matching_group_formula(n: int, k: int):
    assert critical_group(matching_removed(n, k)).factors.diag == matching_group_formula(n, k)


def test_matching_group_formula_domain():
    assert matching_group_formula(5, 2) == [1, 1, 3, 15]
    assert matching_group_formula(6, 2) == [1, 1, 1, 24, 24]
    with pytest.raises(GraphArgumentError):
        matching_group_formula(4, 2)


@pytest.mark.parametrize("G, f1", [
    (cone(star(3)), 2),
    (star(3), 3),
    (matching_removed(6, 2), 3),
    (matching_removed(5, 2), 2),
    (complete(5), 1),
])
def test_f1(G: Graph, f1: int):
    assert f_count(G, 1) == f1


def test_group_errors():
    with pytest.raises(DisconnectedGraphError):
        critical_group(disjoint_union(complete(2), complete(1)))
    with pytest.raises(GraphArgumentError):
        f_count(complete(3), 0)
