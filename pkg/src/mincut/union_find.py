"""Disjoint-set forests marking which vertices a contraction round will merge."""
from __future__ import annotations

import threading

from .errors import ContractError


class UnionFind:
    """Sequential union-find with union by size and path compression."""

    def __init__(self, n: int):
        self.n = n
        self._parent = list(range(n))
        self._size = [1] * n
        self.n_sets = n

    def _check(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise ContractError(f"element {x} out of range [0, {self.n})")

    def find(self, x: int) -> int:
        self._check(x)
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        size = self._size
        if size[rx] < size[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        size[rx] += size[ry]
        self.n_sets -= 1
        return True

    def blocks(self) -> list[list[int]]:
        return _blocks(self)


class _StripedCAS:
    """Compare-and-swap on list slots, serialized per lock stripe.

    CPython offers no atomic CAS on list items; a short critical section per
    stripe gives the same linearizable semantics.
    """

    def __init__(self, values: list[int], stripes: int = 64):
        self.values = values
        self._mask = stripes - 1
        self._locks = [threading.Lock() for _ in range(stripes)]

    def cas(self, i: int, expected: int, new: int) -> bool:
        with self._locks[i & self._mask]:
            if self.values[i] != expected:
                return False
            self.values[i] = new
            return True


class ConcurrentUnionFind:
    """Linearizable union-find for simultaneous use by several workers.

    Roots are linked by CAS, always pointing the larger root id at the
    smaller one, so no cycle can form and the final partition depends only
    on the set of unions performed. ``find`` uses path halving; a halving
    write that loses a race is simply dropped.
    """

    def __init__(self, n: int):
        self.n = n
        self._parent = list(range(n))
        self._cas = _StripedCAS(self._parent)
        self._count_lock = threading.Lock()
        self.n_sets = n

    def find(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise ContractError(f"element {x} out of range [0, {self.n})")
        parent = self._parent
        while True:
            p = parent[x]
            if p == x:
                return x
            gp = parent[p]
            if gp != p:
                self._cas.cas(x, p, gp)
            x = gp

    def union(self, x: int, y: int) -> bool:
        while True:
            rx, ry = self.find(x), self.find(y)
            if rx == ry:
                return False
            if rx < ry:
                rx, ry = ry, rx
            if self._cas.cas(rx, rx, ry):
                with self._count_lock:
                    self.n_sets -= 1
                return True

    def same(self, x: int, y: int) -> bool:
        while True:
            rx, ry = self.find(x), self.find(y)
            if rx == ry:
                return True
            if self._parent[rx] == rx:
                return False

    def blocks(self) -> list[list[int]]:
        return _blocks(self)


def _blocks(uf) -> list[list[int]]:
    """Partition as sorted blocks, ordered by smallest member."""
    groups: dict[int, list[int]] = {}
    out: list[list[int]] = []
    for v in range(uf.n):
        r = uf.find(v)
        block = groups.get(r)
        if block is None:
            block = groups[r] = []
            out.append(block)
        block.append(v)
    return out
