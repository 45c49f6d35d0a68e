"""Weighted undirected graphs in CSR layout, plus the preprocessing used on inputs.

Vertex ids are dense in ``[0, n)``. Adjacency is stored as three flat lists
(``xadj``, ``adjncy``, ``adjwgt``) so that the scan loops can index them
without numpy scalar overhead; construction goes through numpy.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ContractError, InputError, WeightOverflowError

UINT64_MAX = (1 << 64) - 1

# float64 estimates of uint64 sums are only trusted away from the 2**64 boundary
_OVERFLOW_HI = float(1 << 64) * (1 + 1e-9)
_OVERFLOW_LO = float(1 << 64) * (1 - 1e-9)


class Graph:
    """Immutable weighted undirected graph.

    Each undirected edge ``{u, v}`` is stored twice, once in the adjacency of
    either endpoint, with the neighbors of every vertex sorted by id.
    """

    __slots__ = ("xadj", "adjncy", "adjwgt", "degree")

    def __init__(self, xadj: list[int], adjncy: list[int], adjwgt: list[int], degree: list[int]):
        self.xadj = xadj
        self.adjncy = adjncy
        self.adjwgt = adjwgt
        self.degree = degree

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls([0] * (n + 1), [], [], [0] * n)

    @property
    def n(self) -> int:
        return len(self.xadj) - 1

    @property
    def m(self) -> int:
        return len(self.adjncy) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.xadj == other.xadj and self.adjncy == other.adjncy
                and self.adjwgt == other.adjwgt)

    __hash__ = None  # type: ignore[assignment]

    def weighted_degree(self, v: int) -> int:
        return self.degree[v]

    def neighbors(self, v: int) -> Iterator[tuple[int, int]]:
        """Yield ``(neighbor, weight)`` pairs of ``v``."""
        lo, hi = self.xadj[v], self.xadj[v + 1]
        return zip(self.adjncy[lo:hi], self.adjwgt[lo:hi])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield every undirected edge once as ``(u, v, w)`` with ``u < v``."""
        xadj, adjncy, adjwgt = self.xadj, self.adjncy, self.adjwgt
        for u in range(self.n):
            for i in range(xadj[u], xadj[u + 1]):
                v = adjncy[i]
                if u < v:
                    yield u, v, adjwgt[i]

    def edge_weight(self, u: int, v: int) -> int:
        lo, hi = self.xadj[u], self.xadj[u + 1]
        for i in range(lo, hi):
            if self.adjncy[i] == v:
                return self.adjwgt[i]
        return 0

    def total_weight(self) -> int:
        return sum(self.adjwgt) // 2

    def max_degree(self) -> int:
        return max(self.degree, default=0)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Canonical ``(u, v, w)`` arrays with ``u < v``, one entry per edge."""
        n = self.n
        src = np.repeat(np.arange(n, dtype=np.int64), np.diff(np.asarray(self.xadj, dtype=np.int64)))
        dst = np.asarray(self.adjncy, dtype=np.int64)
        w = np.asarray(self.adjwgt, dtype=np.uint64)
        keep = src < dst
        return src[keep], dst[keep], w[keep]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", "VertexMap"]:
        """Subgraph on ``vertices``; new ids follow ascending original id."""
        keep = sorted(set(vertices))
        forward = [-1] * self.n
        for new, old in enumerate(keep):
            forward[old] = new
        us, vs, ws = self.edge_arrays()
        fwd = np.asarray(forward, dtype=np.int64)
        nu, nv = fwd[us], fwd[vs]
        mask = (nu >= 0) & (nv >= 0)
        sub = _csr_from_canonical(len(keep), nu[mask], nv[mask], ws[mask])
        return sub, VertexMap(forward, [[v] for v in keep])


@dataclass
class VertexMap:
    """Correspondence between the vertices of two graphs.

    ``forward[old]`` is the new id of ``old`` (``-1`` when removed) and
    ``inverse[new]`` lists the old ids collapsed into ``new``.
    """

    forward: list[int]
    inverse: list[list[int]] = field(default_factory=list)

    @classmethod
    def identity(cls, n: int) -> "VertexMap":
        return cls(list(range(n)), [[v] for v in range(n)])

    @classmethod
    def from_blocks(cls, block_of: Sequence[int], n_blocks: int) -> "VertexMap":
        inverse: list[list[int]] = [[] for _ in range(n_blocks)]
        for v, b in enumerate(block_of):
            if b >= 0:
                inverse[b].append(v)
        return cls(list(block_of), inverse)

    def then(self, other: "VertexMap") -> "VertexMap":
        """Compose: apply ``self`` first, then ``other``."""
        forward = [other.forward[b] if b >= 0 else -1 for b in self.forward]
        inverse = [[v for mid in group for v in self.inverse[mid]] for group in other.inverse]
        return VertexMap(forward, inverse)

    def originals(self, ids: Iterable[int]) -> list[int]:
        return sorted(v for i in ids for v in self.inverse[i])


def _checked_group_sums(groups: np.ndarray, values: np.ndarray, n_groups: int) -> np.ndarray:
    """Exact per-group sums of uint64 ``values``; raises on 64-bit overflow."""
    exact = np.zeros(n_groups, dtype=np.uint64)
    if len(values) == 0:
        return exact
    np.add.at(exact, groups, values)
    approx = np.bincount(groups, weights=values.astype(np.float64), minlength=n_groups)
    if np.any(approx > _OVERFLOW_HI):
        raise WeightOverflowError("edge weight sum exceeds 2**64 - 1")
    doubtful = np.nonzero(approx >= _OVERFLOW_LO)[0]
    if len(doubtful):
        py_sums = {int(g): 0 for g in doubtful}
        for g, val in zip(groups.tolist(), values.tolist()):
            if g in py_sums:
                py_sums[g] += val
        for g, s in py_sums.items():
            if s > UINT64_MAX:
                raise WeightOverflowError("edge weight sum exceeds 2**64 - 1")
    return exact


def _csr_from_canonical(n: int, us: np.ndarray, vs: np.ndarray, ws: np.ndarray) -> Graph:
    """CSR graph from unique undirected edges (``u != v``, ``w > 0``)."""
    if len(us) == 0:
        return Graph.empty(n)
    src = np.concatenate((us, vs))
    dst = np.concatenate((vs, us))
    wts = np.concatenate((ws, ws)).astype(np.uint64, copy=False)
    order = np.lexsort((dst, src))
    src, dst, wts = src[order], dst[order], wts[order]
    counts = np.bincount(src, minlength=n)
    xadj = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=xadj[1:])
    degree = _checked_group_sums(src, wts, n)
    return Graph(xadj.tolist(), dst.tolist(), wts.tolist(), degree.tolist())


def _as_weight_array(weights) -> np.ndarray:
    raw = np.asarray(weights)
    if raw.dtype == object or raw.dtype.kind not in "iu":
        try:
            as_int = [int(w) for w in raw.tolist()]
        except (TypeError, ValueError) as exc:
            raise InputError(f"edge weights must be integers: {exc}") from None
        if any(w < 0 for w in as_int):
            raise InputError("edge weights must be non-negative")
        if any(w > UINT64_MAX for w in as_int):
            raise WeightOverflowError("edge weight exceeds 2**64 - 1")
        return np.asarray(as_int, dtype=np.uint64)
    if raw.dtype.kind == "i" and len(raw) and raw.min() < 0:
        raise InputError("edge weights must be non-negative")
    return raw.astype(np.uint64)


def build_graph_arrays(n: int, us, vs, ws=None) -> Graph:
    """Array form of :func:`build_graph`; ``ws`` defaults to unit weights."""
    if n < 0:
        raise InputError("vertex count must be non-negative")
    us = np.asarray(us, dtype=np.int64).ravel()
    vs = np.asarray(vs, dtype=np.int64).ravel()
    if ws is None:
        ws = np.ones(len(us), dtype=np.uint64)
    else:
        ws = _as_weight_array(ws).ravel()
    if not (len(us) == len(vs) == len(ws)):
        raise InputError("edge arrays differ in length")
    if len(us) and (min(us.min(), vs.min()) < 0 or max(us.max(), vs.max()) >= n):
        raise InputError(f"vertex id out of range [0, {n})")

    keep = (us != vs) & (ws > 0)
    us, vs, ws = us[keep], vs[keep], ws[keep]
    if len(us) == 0:
        return Graph.empty(n)

    lo = np.minimum(us, vs)
    hi = np.maximum(us, vs)
    keys, inv = np.unique(lo * n + hi, return_inverse=True)
    k = len(keys)
    fwd = us < vs
    # same-direction repeats are parallel edges; a reverse listing is the symmetric twin
    sum_f = _checked_group_sums(inv[fwd], ws[fwd], k)
    sum_b = _checked_group_sums(inv[~fwd], ws[~fwd], k)
    has_f = np.bincount(inv[fwd], minlength=k) > 0
    has_b = np.bincount(inv[~fwd], minlength=k) > 0
    both = has_f & has_b
    if np.any(sum_f[both] != sum_b[both]):
        bad = int(keys[np.nonzero(both & (sum_f != sum_b))[0][0]])
        raise InputError(f"asymmetric weights for edge ({bad // n}, {bad % n})")
    weight = np.where(has_f, sum_f, sum_b)
    return _csr_from_canonical(n, keys // n, keys % n, weight)


def build_graph(edges: Iterable[Sequence[int]], n: int) -> Graph:
    """Build a graph from ``(u, v[, w])`` tuples.

    Parallel edges listed in the same direction are merged by summing their
    weights. An edge listed in both directions is treated as one symmetric
    edge, and the two listings must carry the same total weight. Self-loops
    and zero-weight edges are dropped.
    """
    us: list[int] = []
    vs: list[int] = []
    ws: list[int] = []
    for e in edges:
        if len(e) == 2:
            u, v = e
            w = 1
        elif len(e) == 3:
            u, v, w = e
        else:
            raise InputError(f"edge must be (u, v) or (u, v, w), got {e!r}")
        us.append(int(u))
        vs.append(int(v))
        if not isinstance(w, (int, np.integer)):
            raise InputError(f"edge weight must be an integer, got {w!r}")
        ws.append(int(w))
    if any(w < 0 for w in ws):
        raise InputError("edge weights must be non-negative")
    if any(w > UINT64_MAX for w in ws):
        raise WeightOverflowError("edge weight exceeds 2**64 - 1")
    return build_graph_arrays(n, us, vs, np.asarray(ws, dtype=np.uint64))


def min_degree_vertex(graph: Graph) -> tuple[int, int]:
    """Vertex of minimum weighted degree (smallest id on ties) and its degree."""
    if graph.n == 0:
        raise InputError("empty graph has no minimum-degree vertex")
    degree = graph.degree
    v = min(range(graph.n), key=degree.__getitem__)
    return v, degree[v]


def connected_components(graph: Graph) -> list[list[int]]:
    """Components in order of their smallest vertex; members sorted."""
    n = graph.n
    xadj, adjncy = graph.xadj, graph.adjncy
    comp = [-1] * n
    out: list[list[int]] = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        cid = len(out)
        comp[s] = cid
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for i in range(xadj[u], xadj[u + 1]):
                v = adjncy[i]
                if comp[v] < 0:
                    comp[v] = cid
                    members.append(v)
                    queue.append(v)
        members.sort()
        out.append(members)
    return out


def is_connected(graph: Graph) -> bool:
    return graph.n <= 1 or len(connected_components(graph)) == 1


def largest_connected_component(graph: Graph) -> tuple[Graph, VertexMap]:
    """Induced subgraph on the largest component (smallest contained id wins ties)."""
    if graph.n == 0:
        return Graph.empty(0), VertexMap([], [])
    best: list[int] = []
    for comp in connected_components(graph):
        if len(comp) > len(best):
            best = comp
    return graph.induced_subgraph(best)


def k_core(graph: Graph, k: int, weighted: bool = True) -> tuple[Graph, VertexMap]:
    """Maximal subgraph whose vertices all have degree >= ``k``.

    Degree means weighted degree unless ``weighted`` is false, in which case
    the neighbor count is used.
    """
    if k < 1:
        raise InputError("k must be at least 1")
    n = graph.n
    xadj, adjncy, adjwgt = graph.xadj, graph.adjncy, graph.adjwgt
    if weighted:
        deg = list(graph.degree)
    else:
        deg = [xadj[v + 1] - xadj[v] for v in range(n)]
    removed = bytearray(n)
    stack = [v for v in range(n) if deg[v] < k]
    for v in stack:
        removed[v] = 1
    while stack:
        u = stack.pop()
        for i in range(xadj[u], xadj[u + 1]):
            v = adjncy[i]
            if removed[v]:
                continue
            deg[v] -= adjwgt[i] if weighted else 1
            if deg[v] < k:
                removed[v] = 1
                stack.append(v)
    return graph.induced_subgraph(v for v in range(n) if not removed[v])


def cut_weight(graph: Graph, side: Iterable[int]) -> int:
    """Total weight of edges with exactly one endpoint in ``side``."""
    inside = bytearray(graph.n)
    for v in side:
        if not 0 <= v < graph.n:
            raise ContractError(f"vertex {v} not in graph")
        inside[v] = 1
    xadj, adjncy, adjwgt = graph.xadj, graph.adjncy, graph.adjwgt
    total = 0
    for u in range(graph.n):
        if inside[u]:
            for i in range(xadj[u], xadj[u + 1]):
                if not inside[adjncy[i]]:
                    total += adjwgt[i]
    return total
