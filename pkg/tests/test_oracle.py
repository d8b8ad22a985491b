import networkx as nx
import pytest

from services.errors import BudgetExceededError
from services.grid import layer_size, validate_set
from services.oracle import (
    build_conflict_graph,
    enumerate_maximum_sets,
    max_independent_set,
    orbit_representatives,
)


def _networkx_mis(graph) -> int:
    g = nx.Graph()
    g.add_nodes_from(range(len(graph)))
    for u in range(len(graph)):
        for v in range(u + 1, len(graph)):
            if graph.adjacent(u, v):
                g.add_edge(u, v)
    _, weight = nx.max_weight_clique(nx.complement(g), weight=None)
    return weight


def test_triangle():
    graph = build_conflict_graph(1, 2, 1)
    assert len(graph) == 3
    assert graph.edge_count == 3
    assert max_independent_set(graph).size == 1


def test_square():
    graph = build_conflict_graph(2, 1, 2)
    assert graph.edge_count == 5
    assert not graph.adjacent(graph.index[(0, 1)], graph.index[(1, 0)])
    summary = graph.summary()
    assert (summary.vertices, summary.edges) == (4, 5)


@pytest.mark.parametrize("n,d,k,size", [(3, 2, 1, 9), (3, 2, 2, 7), (3, 2, 3, 7), (2, 2, 2, 3), (4, 1, 2, 6), (3, 1, 1, 4)])
def test_mis_sizes(n, d, k, size):
    result = max_independent_set(build_conflict_graph(n, d, k))
    assert result.size == size
    assert result.certified
    assert validate_set(result.witness, k).ok


@pytest.mark.parametrize("n,d,k", [(3, 2, 1), (3, 2, 2), (4, 1, 2), (2, 3, 1)])
def test_agrees_with_networkx(n, d, k):
    graph = build_conflict_graph(n, d, k)
    assert max_independent_set(graph).size == _networkx_mis(graph)


@pytest.mark.parametrize("n,d,k", [(3, 2, 1), (3, 2, 2), (4, 1, 3)])
def test_symmetry_reduction_keeps_size(n, d, k):
    graph = build_conflict_graph(n, d, k)
    reduced = max_independent_set(graph, use_symmetry=True)
    assert reduced.symmetry_reduced
    assert reduced.size == max_independent_set(graph).size


def test_orbit_representatives():
    graph = build_conflict_graph(2, 1, 1)
    # {00, 11} and {01, 10}
    assert [graph.vertices[i] for i in orbit_representatives(graph)] == [(0, 0), (0, 1)]


def test_node_limit_marks_result_uncertified():
    result = max_independent_set(build_conflict_graph(3, 2, 1), node_limit=0)
    assert not result.certified
    assert result.size >= 1


def test_enumerate_parity_classes():
    result = enumerate_maximum_sets(build_conflict_graph(3, 1, 1))
    assert result.size == 4
    classes = {frozenset(sum(p) % 2 for p in s.points) for s in result.all_solutions}
    assert len(result.all_solutions) == 2
    assert classes == {frozenset({0}), frozenset({1})}


def test_enumerate_k1_has_many_maxima():
    result = enumerate_maximum_sets(build_conflict_graph(2, 2, 1))
    assert result.size == 3
    assert len(result.all_solutions) == 6


def test_enumerate_cap():
    result = enumerate_maximum_sets(build_conflict_graph(2, 2, 1), cap=2)
    assert result.truncated
    assert len(result.all_solutions) == 2


def test_vertex_budget():
    with pytest.raises(BudgetExceededError):
        build_conflict_graph(5, 2, 1)
    with pytest.raises(BudgetExceededError):
        build_conflict_graph(3, 2, 1, max_vertices=10)


def test_enumeration_budget():
    graph = build_conflict_graph(4, 2, 2)
    with pytest.raises(BudgetExceededError):
        enumerate_maximum_sets(graph)


@pytest.mark.parametrize("n,d,k", [(3, 2, 2), (2, 2, 1), (4, 1, 2), (3, 1, 2), (2, 3, 1)])
def test_large_k_gives_middle_layer(n, d, k):
    middle = layer_size(n, d, (n * d) // 2)
    assert max_independent_set(build_conflict_graph(n, d, k)).size == middle
