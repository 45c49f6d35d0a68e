import random

import numpy as np
import pytest

from mincut import generators as gen
from mincut.contraction import (AggregationTable, contract, heavy_pair, heavy_pair_accumulate,
                                number_blocks)
from mincut.errors import WeightOverflowError
from mincut.graph import UINT64_MAX, build_graph, cut_weight
from mincut.union_find import UnionFind


def _uf(n, pairs):
    uf = UnionFind(n)
    for a, b in pairs:
        uf.union(a, b)
    return uf


def test_triangle_merge():
    res = contract(gen.complete(3), _uf(3, [(0, 1)]))
    assert res.graph.n == 2
    assert list(res.graph.edges()) == [(0, 1, 2)]
    assert res.members == [[0, 1], [2]]


def test_identity_partition():
    g = gen.gnp(20, 0.3, 2)
    res = contract(g, UnionFind(g.n))
    assert res.graph == g
    assert res.block_of == list(range(g.n))


def test_single_block():
    res = contract(gen.complete(4), _uf(4, [(0, 1), (1, 2), (2, 3)]), lambda_hat=3)
    assert res.graph.n == 1 and res.graph.m == 0
    assert res.lambda_hat == 3


def test_numbering_by_smallest_member():
    block_of, members = number_blocks(gen.path(5), _uf(5, [(4, 1), (3, 2)]))
    assert members == [[0], [1, 4], [2, 3]]
    assert block_of == [0, 1, 2, 2, 1]


def test_heavy_pair_sum():
    g = build_graph([(0, 2, 2), (1, 2, 3), (1, 3, 5), (0, 1, 9)], 4)
    block_of = [0, 0, 1, 1]
    assert heavy_pair_accumulate(g, block_of, 0, 1) == 10
    assert heavy_pair_accumulate(g, block_of, 0, 1, workers=3) == 10
    apart = build_graph([(0, 1, 1), (2, 3, 1)], 4)
    assert heavy_pair_accumulate(apart, block_of, 0, 1) == 0
    res = contract(apart, _uf(4, [(0, 1), (2, 3)]), heavy_beta=1)
    assert res.graph.m == 0


def test_heavy_pair_selection():
    assert heavy_pair([[0, 1, 2], [3], [4, 5]], beta=16) == (0, 2)
    assert heavy_pair([[0], [1], [2]], beta=16) is None
    blocks = [[0, 1, 2], [3, 4, 5]] + [[v] for v in range(6, 40)]
    assert heavy_pair(blocks, beta=16) == (0, 1)
    assert heavy_pair(blocks, beta=2) is None


def test_degree_lowers_bound():
    g = gen.two_k4_bridge()
    res = contract(g, _uf(8, [(0, 1), (1, 2), (2, 3)]), lambda_hat=3)
    assert res.lambda_hat == 1
    assert res.witness == [0, 1, 2, 3]
    res = contract(g, _uf(8, [(0, 1)]), lambda_hat=3)
    assert res.lambda_hat == 3 and res.witness is None


def test_weights_near_limit():
    # a merged edge never outweighs its endpoint's degree, which is already checked
    with pytest.raises(WeightOverflowError):
        build_graph([(0, 2, UINT64_MAX), (1, 2, 1)], 3)
    half = UINT64_MAX // 2
    g = build_graph([(0, 2, half), (1, 2, half)], 3)
    res = contract(g, _uf(3, [(0, 1)]))
    assert list(res.graph.edges()) == [(0, 1, 2 * half)]


def test_aggregation_table_keeps_keys_apart():
    table = AggregationTable(shards=2)
    for k in range(100):
        table.add(k, 1)
        table.add(k, k)
    assert len(table) == 100
    assert dict(table.items()) == {k: k + 1 for k in range(100)}


@pytest.mark.parametrize("workers", [1, 2, 4])
@pytest.mark.parametrize("beta", [0, 1, 16])
@pytest.mark.parametrize("seed", range(10))
def test_against_dense_quotient(seed, workers, beta):
    rng = random.Random(seed)
    g = gen.gnp(30, 0.25, seed)
    uf = _uf(g.n, [(rng.randrange(g.n), rng.randrange(g.n)) for _ in range(rng.randrange(40))])
    res = contract(g, uf, workers, heavy_beta=beta)
    k = len(res.members)
    dense = np.zeros((k, k), dtype=np.int64)
    for u, v, w in g.edges():
        a, b = res.block_of[u], res.block_of[v]
        if a != b:
            dense[a, b] += w
            dense[b, a] += w
    for a in range(k):
        for b in range(k):
            assert res.graph.edge_weight(a, b) == dense[a, b]
    # every cut of the quotient is a cut of the input with the same weight
    side = [b for b in range(k) if rng.random() < 0.5]
    assert cut_weight(res.graph, side) == cut_weight(g, res.vertex_map.originals(side))
