"""Addressable max-priority queues over vertex ids with priorities clamped to a cap.

All three queues share one contract (:class:`BoundedPQ`) but differ in which
of several equal-priority vertices ``pop_max`` hands out:

* :class:`BStack` -- last element of the top bucket (LIFO),
* :class:`BQueue` -- first element of the top bucket (FIFO),
* :class:`BottomUpHeap` -- binary heap, no recency preference.

Once a stored priority reaches the cap, further increases are ignored, so a
scan does not pay for updates that cannot change the outcome.
"""
from __future__ import annotations

from collections import deque

from .errors import ContractError

QUEUE_KINDS = ("heap", "bstack", "bqueue")


class BoundedPQ:
    """Shared bookkeeping: clamping, membership, and operation counters.

    ``updates`` counts priority writes that actually happened (inserts plus
    effective key increases); clamped no-op increases are not counted.
    """

    kind = "abstract"

    def __init__(self, n: int, cap: int):
        if cap < 0:
            raise ContractError("cap must be non-negative")
        self.cap = cap
        self.n = n
        self._prio = [-1] * n
        self._size = 0
        self.updates = 0

    def __len__(self) -> int:
        return self._size

    def __contains__(self, v: int) -> bool:
        return self._prio[v] >= 0

    def priority(self, v: int) -> int:
        p = self._prio[v]
        if p < 0:
            raise ContractError(f"vertex {v} not in queue")
        return p

    def insert(self, v: int, priority: int) -> int:
        """Add ``v``; returns the stored (clamped) priority."""
        if priority < 0:
            raise ContractError("priority must be non-negative")
        if self._prio[v] >= 0:
            raise ContractError(f"vertex {v} already in queue")
        p = priority if priority < self.cap else self.cap
        self._prio[v] = p
        self._size += 1
        self.updates += 1
        self._push(v, p)
        return p

    def increase_key(self, v: int, priority: int) -> None:
        cur = self._prio[v]
        if cur < 0:
            raise ContractError(f"vertex {v} not in queue")
        if cur == self.cap:
            return
        if priority < cur:
            raise ContractError(f"cannot decrease key of {v} from {cur} to {priority}")
        p = priority if priority < self.cap else self.cap
        if p == cur:
            return
        self._prio[v] = p
        self.updates += 1
        self._raise(v, cur, p)

    def pop_max(self) -> tuple[int, int]:
        if self._size == 0:
            raise ContractError("pop from empty queue")
        v = self._pop()
        p = self._prio[v]
        self._prio[v] = -1
        self._size -= 1
        return v, p

    def _push(self, v: int, p: int) -> None:
        raise NotImplementedError

    def _raise(self, v: int, old: int, new: int) -> None:
        raise NotImplementedError

    def _pop(self) -> int:
        raise NotImplementedError


class _BucketPQ(BoundedPQ):
    """Array of ``cap + 1`` buckets plus a top-bucket pointer.

    Moved entries are left behind in their old bucket and skipped on pop;
    each entry is tagged with a fresh ticket so a stale copy can never be
    mistaken for a live one, which keeps the in-bucket order exact.
    """

    def __init__(self, n: int, cap: int):
        super().__init__(n, cap)
        self._buckets = [self._container() for _ in range(cap + 1)]
        self._ticket = [0] * n
        self._next_ticket = 1
        self._top = 0
        self.bucket_scans = 0

    @staticmethod
    def _container():
        raise NotImplementedError

    def _push(self, v: int, p: int) -> None:
        t = self._next_ticket * self.n + v
        self._next_ticket += 1
        self._ticket[v] = t
        self._buckets[p].append(t)
        if p > self._top:
            self._top = p

    def _raise(self, v: int, old: int, new: int) -> None:
        self._push(v, new)


class BStack(_BucketPQ):
    kind = "bstack"

    @staticmethod
    def _container():
        return []

    def _pop(self) -> int:
        buckets, ticket, n = self._buckets, self._ticket, self.n
        top = self._top
        while True:
            bucket = buckets[top]
            while bucket:
                t = bucket.pop()
                v = t % n
                if ticket[v] == t:
                    ticket[v] = 0
                    self._top = top
                    return v
            top -= 1
            self.bucket_scans += 1


class BQueue(_BucketPQ):
    kind = "bqueue"

    @staticmethod
    def _container():
        return deque()

    def _pop(self) -> int:
        buckets, ticket, n = self._buckets, self._ticket, self.n
        top = self._top
        while True:
            bucket = buckets[top]
            while bucket:
                t = bucket.popleft()
                v = t % n
                if ticket[v] == t:
                    ticket[v] = 0
                    self._top = top
                    return v
            top -= 1
            self.bucket_scans += 1


class BottomUpHeap(BoundedPQ):
    """Addressable binary max-heap; deletions sift the root hole to a leaf first."""

    kind = "heap"

    def __init__(self, n: int, cap: int):
        super().__init__(n, cap)
        self._heap = [-1]  # 1-indexed
        self._pos = [0] * n

    def _sift_up(self, i: int) -> None:
        heap, pos, prio = self._heap, self._pos, self._prio
        v = heap[i]
        p = prio[v]
        while i > 1:
            parent = i >> 1
            u = heap[parent]
            if prio[u] >= p:
                break
            heap[i] = u
            pos[u] = i
            i = parent
        heap[i] = v
        pos[v] = i

    def _push(self, v: int, p: int) -> None:
        self._heap.append(v)
        self._sift_up(len(self._heap) - 1)

    def _raise(self, v: int, old: int, new: int) -> None:
        self._sift_up(self._pos[v])

    def _pop(self) -> int:
        heap, pos, prio = self._heap, self._pos, self._prio
        top = heap[1]
        last = heap.pop()
        size = len(heap) - 1
        if size == 0:
            return top
        hole = 1
        child = 2
        while child <= size:
            if child < size and prio[heap[child + 1]] > prio[heap[child]]:
                child += 1
            u = heap[child]
            heap[hole] = u
            pos[u] = hole
            hole = child
            child = hole << 1
        heap[hole] = last
        pos[last] = hole
        self._sift_up(hole)
        return top


_KINDS = {"heap": BottomUpHeap, "bstack": BStack, "bqueue": BQueue}


def make_queue(kind: str, n: int, cap: int) -> BoundedPQ:
    try:
        cls = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown queue kind {kind!r}; expected one of {QUEUE_KINDS}") from None
    return cls(n, cap)
