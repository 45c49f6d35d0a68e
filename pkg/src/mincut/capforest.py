"""Sequential CAPFOREST scan with capped queue priorities.

The scan visits vertices in order of their connection strength ``r`` to the
already scanned set. When scanning edge ``(x, y)`` pushes ``r(y)`` across the
bound ``lambda_hat`` the endpoints are certified to be at least that strongly
connected and are merged in a union-find; the graph itself is not touched.
The weight ``alpha`` of the cut around the scanned set is tracked on the way
and lowers ``lambda_hat`` whenever it is smaller.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ContractError
from .graph import Graph
from .pqueues import make_queue
from .union_find import UnionFind


@dataclass
class ScanResult:
    """Outcome of one scan round.

    ``witness`` lists the scanned vertices forming the cut of weight
    ``lambda_hat`` when the scan lowered the bound, else ``None``.
    """

    union_find: object
    lambda_hat: int
    unions: int
    witness: list[int] | None = None
    pq_updates: int = 0
    edge_scans: int = 0
    q: dict[tuple[int, int], int] | None = field(default=None, repr=False)
    workers: list = field(default_factory=list, repr=False)

    def __iter__(self):
        # lets callers unpack (union_find, lambda_hat, unions)
        return iter((self.union_find, self.lambda_hat, self.unions))


def queue_cap(graph: Graph, lambda_hat: int, capped: bool) -> int:
    """Priority cap: ``lambda_hat`` when capped, otherwise one no ``r`` value can reach."""
    if capped:
        return lambda_hat
    return max(graph.max_degree(), lambda_hat)


def random_start(rng: random.Random, n: int) -> int:
    return rng.randrange(n)


def capforest(
    graph: Graph,
    lambda_hat: int,
    start_vertex: int | None = None,
    queue_kind: str = "heap",
    *,
    capped: bool = True,
    seed: int | None = None,
    union_find: UnionFind | None = None,
    record_q: bool = False,
) -> ScanResult:
    """Run one CAPFOREST scan over a connected graph.

    ``start_vertex`` defaults to a draw from ``random.Random(seed)``. With
    ``record_q`` the per-edge lower bounds are returned keyed by ``(u, v)``
    with ``u < v``.
    """
    n = graph.n
    if lambda_hat < 1:
        raise ContractError("lambda_hat must be at least 1")
    uf = union_find if union_find is not None else UnionFind(n)
    if n == 0:
        return ScanResult(uf, lambda_hat, 0)
    if start_vertex is None:
        start_vertex = random_start(random.Random(seed), n)
    if not 0 <= start_vertex < n:
        raise ContractError(f"start vertex {start_vertex} out of range")

    xadj, adjncy, adjwgt, degree = graph.xadj, graph.adjncy, graph.adjwgt, graph.degree
    cap = queue_cap(graph, lambda_hat, capped)
    pq = make_queue(queue_kind, n, cap)
    insert, increase, pop = pq.insert, pq.increase_key, pq.pop_max
    in_queue = pq._prio  # read-only membership probe, -1 when absent
    r = [0] * n
    visited = bytearray(n)
    q: dict[tuple[int, int], int] | None = {} if record_q else None

    lam = lambda_hat
    alpha = 0
    scanned = 0
    best_prefix = 0
    order: list[int] = []
    unions = 0
    edge_scans = 0

    insert(start_vertex, 0)
    while len(pq):
        x, _ = pop()
        visited[x] = 1
        order.append(x)
        scanned += 1
        alpha += degree[x] - 2 * r[x]
        # the cut around the whole vertex set is empty, not a candidate
        if scanned < n and alpha < lam:
            lam = alpha
            best_prefix = scanned
        for i in range(xadj[x], xadj[x + 1]):
            y = adjncy[i]
            if visited[y]:
                continue
            edge_scans += 1
            ry = r[y]
            nr = ry + adjwgt[i]
            if ry < lam <= nr and uf.union(x, y):
                unions += 1
            r[y] = nr
            if q is not None:
                # q is the r value the capped scan works with
                q[(x, y) if x < y else (y, x)] = nr if nr < cap else cap
            if in_queue[y] >= 0:
                increase(y, nr)
            else:
                insert(y, nr)

    if scanned < n:
        raise ContractError("graph is disconnected; scan reached only part of it")
    witness = order[:best_prefix] if best_prefix else None
    return ScanResult(uf, lam, unions, witness, pq.updates, edge_scans, q)


def q_lower_bounds(
    graph: Graph,
    lambda_hat: int,
    start_vertex: int | None = None,
    queue_kind: str = "heap",
    *,
    capped: bool = True,
    seed: int | None = None,
) -> dict[tuple[int, int], int]:
    """Per-edge connectivity lower bounds ``q(e)`` assigned by one scan.

    Values are clamped at the priority cap, as the scan order only certifies
    ``r`` values up to that point.
    """
    res = capforest(graph, lambda_hat, start_vertex, queue_kind,
                    capped=capped, seed=seed, record_q=True)
    assert res.q is not None
    return res.q
