"""Seeded random graph families for tests, acceptance runs and benchmarks."""
from __future__ import annotations

import random

import numpy as np

from .graph import Graph, build_graph, build_graph_arrays


def _w(rng: random.Random, max_weight: int) -> int:
    return rng.randint(1, max_weight)


def path(n: int) -> Graph:
    return build_graph([(i, i + 1, 1) for i in range(n - 1)], n)


def cycle(n: int, weights: list[int] | None = None) -> Graph:
    weights = weights or [1] * n
    return build_graph([(i, (i + 1) % n, weights[i]) for i in range(n)], n)


def complete(n: int, weight: int = 1) -> Graph:
    return build_graph([(u, v, weight) for u in range(n) for v in range(u + 1, n)], n)


def star(leaves: int) -> Graph:
    return build_graph([(0, i, 1) for i in range(1, leaves + 1)], leaves + 1)


def clique_bridge(sizes: list[int], bridge_weight: int = 1, clique_weight: int = 1) -> Graph:
    """Cliques laid out consecutively, each joined to the next by one edge."""
    edges = []
    offset = 0
    prev_last = None
    for k in sizes:
        edges += [(offset + a, offset + b, clique_weight) for a in range(k) for b in range(a + 1, k)]
        if prev_last is not None:
            edges.append((prev_last, offset, bridge_weight))
        prev_last = offset + k - 1
        offset += k
    return build_graph(edges, offset)


def two_k4_bridge() -> Graph:
    """Cliques on {0..3} and {4..7} joined by the unit edge (3, 4)."""
    return clique_bridge([4, 4])


def bowtie() -> Graph:
    """Triangles {0,1,2} and {3,4,5} joined by the unit edge (2, 3)."""
    return clique_bridge([3, 3])


def random_tree(n: int, seed: int, max_weight: int = 16) -> Graph:
    rng = random.Random(seed)
    return build_graph([(v, rng.randrange(v), _w(rng, max_weight)) for v in range(1, n)], n)


def random_cycle(n: int, seed: int, max_weight: int = 16) -> Graph:
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph([(perm[i], perm[(i + 1) % n], _w(rng, max_weight)) for i in range(n)], n)


def gnp(n: int, p: float, seed: int, max_weight: int = 16) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v, _w(rng, max_weight))
             for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(edges, n)


def random_clique_bridge(seed: int, max_weight: int = 16) -> Graph:
    """2-4 random cliques chained by random-weight bridges, ids shuffled."""
    rng = random.Random(seed)
    sizes = [rng.randint(2, 7) for _ in range(rng.randint(2, 4))]
    base = clique_bridge(sizes)
    perm = list(range(base.n))
    rng.shuffle(perm)
    edges = []
    for u, v, _ in base.edges():
        same = _block(sizes, u) == _block(sizes, v)
        w = rng.randint(max(1, max_weight // 2), max_weight) if same else _w(rng, max_weight // 2 or 1)
        edges.append((perm[u], perm[v], w))
    return build_graph(edges, base.n)


def _block(sizes: list[int], v: int) -> int:
    for i, k in enumerate(sizes):
        if v < k:
            return i
        v -= k
    raise IndexError(v)


def disconnected_union(seed: int, max_weight: int = 16) -> Graph:
    """Two or three random connected pieces with no edges between them."""
    rng = random.Random(seed)
    edges = []
    offset = 0
    for _ in range(rng.randint(2, 3)):
        k = rng.randint(1, 12)
        piece = gnp(k, 0.5, rng.randrange(1 << 30), max_weight)
        # spanning path keeps the piece connected
        edges += [(offset + i, offset + i + 1, _w(rng, max_weight)) for i in range(k - 1)]
        edges += [(offset + u, offset + v, w) for u, v, w in piece.edges()]
        offset += k
    perm = list(range(offset))
    rng.shuffle(perm)
    return build_graph([(perm[u], perm[v], w) for u, v, w in edges], offset)


def random_gnm(n: int, avg_degree: float, seed: int) -> Graph:
    """Unit-weight G(n, m) with ``m = n * avg_degree / 2`` (duplicates merged)."""
    rng = np.random.default_rng(seed)
    m = int(n * avg_degree / 2)
    us = rng.integers(0, n, size=m, dtype=np.int64)
    vs = rng.integers(0, n, size=m, dtype=np.int64)
    lo, hi = np.minimum(us, vs), np.maximum(us, vs)
    keep = lo != hi
    pairs = np.unique(lo[keep] * n + hi[keep])
    return build_graph_arrays(n, pairs // n, pairs % n)
