import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mincut import generators as gen
from mincut.errors import InputError, WeightOverflowError
from mincut.graph import (UINT64_MAX, Graph, VertexMap, build_graph, build_graph_arrays,
                          connected_components, cut_weight, is_connected, k_core,
                          largest_connected_component, min_degree_vertex)

TRIANGLE = [(0, 1, 3), (1, 2, 1), (0, 2, 1)]


def test_symmetric_listing_is_one_edge():
    g = build_graph([(0, 1, 1), (1, 0, 1)], 2)
    assert g.m == 1
    assert g.edge_weight(0, 1) == 1
    assert g.degree == [1, 1]


def test_parallel_edges_are_summed():
    g = build_graph([(0, 1, 2), (0, 1, 3)], 2)
    assert list(g.edges()) == [(0, 1, 5)]


def test_self_loop_dropped():
    g = build_graph([(0, 0, 7), (0, 1, 1)], 2)
    assert list(g.edges()) == [(0, 1, 1)]
    assert g.degree == [1, 1]


def test_zero_weight_dropped():
    g = build_graph([(0, 1, 0), (1, 2, 4)], 3)
    assert list(g.edges()) == [(1, 2, 4)]


def test_asymmetric_listing_rejected():
    with pytest.raises(InputError):
        build_graph([(0, 1, 2), (1, 0, 3)], 2)


@pytest.mark.parametrize("edges", [[(0, 2, 1)], [(-1, 0, 1)]])
def test_vertex_out_of_range(edges):
    with pytest.raises(InputError):
        build_graph(edges, 2)


def test_negative_weight_rejected():
    with pytest.raises(InputError):
        build_graph([(0, 1, -1)], 2)


def test_overflow_checked():
    with pytest.raises(WeightOverflowError):
        build_graph([(0, 1, UINT64_MAX), (0, 1, 1)], 2)
    g = build_graph([(0, 1, UINT64_MAX - 1), (0, 1, 1)], 2)
    assert g.edge_weight(0, 1) == UINT64_MAX
    with pytest.raises(WeightOverflowError):
        build_graph([(0, 1, UINT64_MAX), (0, 2, 1)], 3)


def test_arrays_match_tuples():
    edges = [(0, 1, 2), (2, 1, 5), (3, 0, 1), (0, 1, 4)]
    a = build_graph(edges, 4)
    b = build_graph_arrays(4, [e[0] for e in edges], [e[1] for e in edges], [e[2] for e in edges])
    assert a == b


def test_csr_layout_sorted():
    g = build_graph([(2, 0, 1), (1, 0, 1), (2, 1, 1)], 3)
    assert g.xadj == [0, 2, 4, 6]
    assert g.adjncy == [1, 2, 0, 2, 0, 1]


def test_min_degree_examples():
    assert min_degree_vertex(gen.path(3)) == (0, 1)
    assert min_degree_vertex(gen.complete(4)) == (0, 3)
    assert min_degree_vertex(build_graph(TRIANGLE, 3)) == (2, 2)
    with pytest.raises(InputError):
        min_degree_vertex(Graph.empty(0))


def test_kcore_examples():
    tri_pendant = build_graph([(0, 1), (1, 2), (0, 2), (2, 3)], 4)
    core, vmap = k_core(tri_pendant, 2)
    assert core == gen.complete(3)
    assert vmap.forward == [0, 1, 2, -1]

    core, vmap = k_core(gen.star(3), 2)
    assert core.n == 0
    assert vmap.forward == [-1] * 4

    c5 = gen.cycle(5)
    core, _ = k_core(c5, 2)
    assert core == c5


def test_kcore_weighted_vs_unweighted():
    g = build_graph([(0, 1, 5), (1, 2, 1), (0, 2, 1)], 3)
    assert k_core(g, 3)[0].n == 2
    assert k_core(g, 6)[0].n == 0  # peeling vertex 2 drops the others to 5
    assert k_core(g, 2, weighted=False)[0].n == 3
    with pytest.raises(InputError):
        k_core(g, 0)


def test_lcc_examples():
    two_tri = build_graph([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], 6)
    sub, vmap = largest_connected_component(two_tri)
    assert sub == gen.complete(3)
    assert vmap.inverse == [[0], [1], [2]]

    c5 = gen.cycle(5)
    assert largest_connected_component(c5)[0] == c5

    k4_iso = build_graph(list(gen.complete(4).edges()), 5)
    sub, vmap = largest_connected_component(k4_iso)
    assert sub == gen.complete(4)
    assert vmap.forward[4] == -1

    empty, vmap = largest_connected_component(Graph.empty(0))
    assert empty.n == 0


def test_components_and_cut_weight():
    g = gen.disconnected_union(3)
    comps = connected_components(g)
    assert len(comps) >= 2
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    assert not is_connected(g)
    assert cut_weight(g, comps[0]) == 0
    assert cut_weight(build_graph(TRIANGLE, 3), [2]) == 2


def test_vertex_map_composition():
    first = VertexMap.from_blocks([0, 0, 1, 2], 3)
    second = VertexMap.from_blocks([0, 1, 1], 2)
    both = first.then(second)
    assert both.forward == [0, 0, 1, 1]
    assert both.inverse == [[0, 1], [2, 3]]
    assert both.originals([1]) == [2, 3]


def _edge_lists():
    return st.integers(2, 9).flatmap(lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, 20)),
                 max_size=30)))


@settings(max_examples=150, deadline=None)
@given(_edge_lists())
def test_one_directional_lists_match_dense_sum(data):
    n, edges = data
    dense = np.zeros((n, n), dtype=np.int64)
    edges = [(min(u, v), max(u, v), w) for u, v, w in edges]
    g = build_graph(edges, n)
    for u, v, w in edges:
        if u != v:
            dense[u, v] += w
    expected = [(u, v, int(dense[u, v])) for u in range(n) for v in range(u + 1, n) if dense[u, v]]
    assert list(g.edges()) == expected
    assert sum(g.degree) == 2 * g.total_weight()
    for v in range(n):
        assert g.degree[v] == sum(w for _, w in g.neighbors(v))
