"""Quotient-graph construction from a union-find partition.

Every block of the partition becomes one vertex. Edge weights between blocks
are aggregated in a sharded table that several workers update concurrently;
the edges between the two largest blocks, if both are large, are summed in
worker-local counters instead, since they would all hit the same table slot.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import UINT64_MAX, Graph, VertexMap, _csr_from_canonical, min_degree_vertex
from .errors import WeightOverflowError

HEAVY_BETA = 16


def _mix64(key: int) -> int:
    # splitmix64 finalizer
    key = (key ^ (key >> 30)) * 0xBF58476D1CE4E5B9 & 0xFFFFFFFFFFFFFFFF
    key = (key ^ (key >> 27)) * 0x94D049BB133111EB & 0xFFFFFFFFFFFFFFFF
    return key ^ (key >> 31)


class AggregationTable:
    """Concurrent ``key -> summed weight`` map, sharded by a 64-bit hash.

    Keys are exact block-pair encodings, so hash collisions only share a
    shard and never merge entries.
    """

    def __init__(self, shards: int = 64):
        self._mask = shards - 1
        self._maps: list[dict[int, int]] = [{} for _ in range(shards)]
        self._locks = [threading.Lock() for _ in range(shards)]

    def add(self, key: int, weight: int) -> None:
        s = _mix64(key) & self._mask
        with self._locks[s]:
            d = self._maps[s]
            d[key] = d.get(key, 0) + weight

    def items(self):
        for d in self._maps:
            yield from d.items()

    def __len__(self) -> int:
        return sum(len(d) for d in self._maps)


@dataclass
class ContractionResult:
    """Contracted graph plus the bookkeeping to map it back.

    ``witness`` holds the vertices of the input graph inside the
    minimum-degree block when that block's degree lowered ``lambda_hat``.
    """

    graph: Graph
    block_of: list[int]
    members: list[list[int]]
    lambda_hat: int | None
    witness: list[int] | None = None

    @property
    def vertex_map(self) -> VertexMap:
        return VertexMap(self.block_of, self.members)


def number_blocks(graph: Graph, union_find) -> tuple[list[int], list[list[int]]]:
    """Dense block ids, ascending by each block's smallest vertex."""
    n = graph.n
    root_id: dict[int, int] = {}
    block_of = [0] * n
    members: list[list[int]] = []
    find = union_find.find
    for v in range(n):
        r = find(v)
        b = root_id.get(r)
        if b is None:
            b = root_id[r] = len(members)
            members.append([])
        block_of[v] = b
        members[b].append(v)
    return block_of, members


def heavy_pair(members: Sequence[Sequence[int]], beta: int = HEAVY_BETA) -> tuple[int, int] | None:
    """The two largest blocks if both hold more than ``n_blocks / beta`` vertices."""
    n_blocks = len(members)
    if n_blocks < 2 or beta <= 0:
        return None
    ranked = sorted(range(n_blocks), key=lambda b: (-len(members[b]), b))
    a, b = ranked[0], ranked[1]
    limit = n_blocks / beta
    if len(members[a]) > limit and len(members[b]) > limit and len(members[b]) > 1:
        return (a, b) if a < b else (b, a)
    return None


def _ranges(graph: Graph, parts: int) -> list[tuple[int, int]]:
    """Split vertices into ``parts`` contiguous ranges of similar edge count."""
    n = graph.n
    if parts <= 1 or n == 0:
        return [(0, n)]
    xadj = graph.xadj
    total = xadj[n]
    bounds = [0]
    for k in range(1, parts):
        target = total * k // parts
        lo = bounds[-1]
        hi = n
        while lo < hi:
            mid = (lo + hi) // 2
            if xadj[mid] < target:
                lo = mid + 1
            else:
                hi = mid
        bounds.append(lo)
    bounds.append(n)
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]


def heavy_pair_accumulate(
    graph: Graph,
    block_of: Sequence[int],
    heavy_a: int,
    heavy_b: int,
    workers: int = 1,
) -> int:
    """Total weight between blocks ``heavy_a`` and ``heavy_b``.

    Each worker sums its own vertex range; the partial sums are added once.
    """
    xadj, adjncy, adjwgt = graph.xadj, graph.adjncy, graph.adjwgt
    partial: list[int] = []
    for lo, hi in _ranges(graph, workers):
        local = 0
        for u in range(lo, hi):
            bu = block_of[u]
            if bu != heavy_a:
                continue
            for i in range(xadj[u], xadj[u + 1]):
                if block_of[adjncy[i]] == heavy_b:
                    local += adjwgt[i]
        partial.append(local)
    return sum(partial)


def _aggregate_range(graph, block_of, n_blocks, lo, hi, heavy, table, heavy_sums) -> None:
    xadj, adjncy, adjwgt = graph.xadj, graph.adjncy, graph.adjwgt
    ha, hb = heavy if heavy is not None else (-1, -1)
    add = table.add
    local_heavy = 0
    for u in range(lo, hi):
        bu = block_of[u]
        for i in range(xadj[u], xadj[u + 1]):
            v = adjncy[i]
            if v <= u:
                continue
            bv = block_of[v]
            if bu == bv:
                continue
            a, b = (bu, bv) if bu < bv else (bv, bu)
            if a == ha and b == hb:
                local_heavy += adjwgt[i]
            else:
                add(a * n_blocks + b, adjwgt[i])
    heavy_sums.append(local_heavy)


def contract(
    graph: Graph,
    union_find,
    workers: int = 1,
    lambda_hat: int | None = None,
    *,
    heavy_beta: int = HEAVY_BETA,
) -> ContractionResult:
    """Collapse every union-find block into a single vertex.

    If ``lambda_hat`` is given and a collapsed vertex has smaller weighted
    degree, that trivial cut becomes the new bound.
    """
    block_of, members = number_blocks(graph, union_find)
    n_blocks = len(members)
    heavy = heavy_pair(members, heavy_beta)
    table = AggregationTable()
    heavy_sums: list[int] = []
    ranges = _ranges(graph, workers)
    if len(ranges) == 1:
        _aggregate_range(graph, block_of, n_blocks, *ranges[0], heavy, table, heavy_sums)
    else:
        threads = [
            threading.Thread(target=_aggregate_range,
                             args=(graph, block_of, n_blocks, lo, hi, heavy, table, heavy_sums))
            for lo, hi in ranges
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

    keys: list[int] = []
    weights: list[int] = []
    for key, w in table.items():
        keys.append(key)
        weights.append(w)
    if heavy is not None:
        w = sum(heavy_sums)
        if w:
            keys.append(heavy[0] * n_blocks + heavy[1])
            weights.append(w)
    if weights and max(weights) > UINT64_MAX:
        raise WeightOverflowError("contracted edge weight exceeds 2**64 - 1")
    karr = np.asarray(keys, dtype=np.int64)
    contracted = _csr_from_canonical(
        n_blocks, karr // max(n_blocks, 1), karr % max(n_blocks, 1),
        np.asarray(weights, dtype=np.uint64))

    witness = None
    if lambda_hat is not None and n_blocks >= 2:
        v, d = min_degree_vertex(contracted)
        if d < lambda_hat:
            lambda_hat = d
            witness = list(members[v])
    return ContractionResult(contracted, block_of, members, lambda_hat, witness)
