"""Slow, independent ground truth for tests: Stoer-Wagner, max-flow, cut enumeration."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import Graph, connected_components


@dataclass
class OracleCut:
    value: int
    side: list[int]


def _dense(graph: Graph) -> np.ndarray:
    n = graph.n
    mat = np.zeros((n, n), dtype=object if graph.max_degree() >= 1 << 62 else np.int64)
    for u, v, w in graph.edges():
        mat[u, v] = w
        mat[v, u] = w
    return mat


def oracle_global_mincut(graph: Graph) -> OracleCut:
    """Exact minimum cut by Stoer-Wagner minimum-cut phases on a dense matrix."""
    n = graph.n
    if n < 2:
        raise InputError("minimum cut needs at least two vertices")
    comps = connected_components(graph)
    if len(comps) > 1:
        return OracleCut(0, comps[0])

    w = _dense(graph)
    groups = [[v] for v in range(n)]
    active = list(range(n))
    best_value = None
    best_side: list[int] = []
    while len(active) > 1:
        idx = np.asarray(active)
        sub = w[np.ix_(idx, idx)]
        k = len(active)
        in_a = np.zeros(k, dtype=bool)
        conn = sub[0].copy()
        in_a[0] = True
        prev, last = 0, 0
        for _ in range(k - 1):
            masked = np.where(in_a, -1, conn)
            nxt = int(np.argmax(masked))
            in_a[nxt] = True
            conn = conn + sub[nxt]
            prev, last = last, nxt
        cut_of_phase = int(sub[last].sum())
        s, t = active[prev], active[last]
        if best_value is None or cut_of_phase < best_value:
            best_value = cut_of_phase
            best_side = sorted(groups[t])
        # merge t into s
        w[s, :] += w[t, :]
        w[:, s] += w[:, t]
        w[s, s] = 0
        groups[s].extend(groups[t])
        active.remove(t)
    assert best_value is not None
    return OracleCut(best_value, best_side)


def all_cut_weights(graph: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Weights of all proper cuts, each listed once.

    Returns ``(masks, weights)`` where bit ``i`` of a mask says vertex ``i``
    is on the side not containing vertex ``n - 1``. Feasible for ``n <= 20``.
    """
    n = graph.n
    if n < 2:
        raise InputError("cut enumeration needs at least two vertices")
    if n > 22:
        raise InputError("cut enumeration limited to n <= 22")
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64)
    weights = np.zeros(len(masks), dtype=np.int64)
    for u, v, w in graph.edges():
        crossing = ((masks >> u) ^ (masks >> v)) & 1
        weights += crossing * int(w)
    return masks, weights


def brute_force_mincut(graph: Graph) -> OracleCut:
    """Minimum over all ``2**(n-1) - 1`` proper cuts."""
    masks, weights = all_cut_weights(graph)
    i = int(np.argmin(weights))
    mask = int(masks[i])
    return OracleCut(int(weights[i]), [v for v in range(graph.n) if mask >> v & 1])


def cuts_below(graph: Graph, bound: int) -> list[list[int]]:
    """Every proper cut of weight ``< bound``, as the side without vertex ``n - 1``."""
    masks, weights = all_cut_weights(graph)
    out = []
    for mask in masks[weights < bound].tolist():
        out.append([v for v in range(graph.n) if mask >> v & 1])
    return out


def oracle_connectivity(graph: Graph, s: int, t: int) -> int:
    """Maximum ``s``-``t`` flow by shortest augmenting paths (Edmonds-Karp)."""
    if s == t:
        raise InputError("source and sink must differ")
    n = graph.n
    if not (0 <= s < n and 0 <= t < n):
        raise InputError("terminal out of range")
    residual: list[dict[int, int]] = [dict(graph.neighbors(v)) for v in range(n)]
    flow = 0
    while True:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            u = queue.popleft()
            for v, cap in residual[u].items():
                if cap > 0 and parent[v] < 0:
                    parent[v] = u
                    queue.append(v)
        if parent[t] < 0:
            return flow
        bottleneck = None
        v = t
        while v != s:
            u = parent[v]
            c = residual[u][v]
            bottleneck = c if bottleneck is None or c < bottleneck else bottleneck
            v = u
        v = t
        while v != s:
            u = parent[v]
            residual[u][v] -= bottleneck
            residual[v][u] = residual[v].get(u, 0) + bottleneck
            v = u
        flow += bottleneck
