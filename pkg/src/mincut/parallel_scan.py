"""Parallel CAPFOREST: several workers grow disjoint scanned regions at once.

Workers share the graph, a visited array, a concurrent union-find and the
bound ``lambda_hat``. A worker that pops a vertex already claimed by someone
else blacklists it and never scans it; edges into blacklisted vertices are
ignored from then on, which keeps every union it issues certified.

Each worker is written as a generator that yields after every pop. The
default runner drives one generator per thread; :class:`DeterministicScheduler`
drives them from a single thread in a reproducible interleaving, which is
what the tests use to explore schedules.
"""
from __future__ import annotations

import os
import random
import threading
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .capforest import ScanResult, queue_cap, random_start
from .errors import ContractError
from .graph import Graph
from .pqueues import BoundedPQ, make_queue
from .union_find import ConcurrentUnionFind


def default_workers() -> int:
    env = os.environ.get("MINCUT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


class SharedVisited:
    """Per-vertex claim flags, written without locks and only ever set."""

    def __init__(self, n: int):
        self.flags = bytearray(n)

    def claim(self, v: int) -> bool:
        """Mark ``v`` visited; ``False`` if it already was.

        The check and the write are not atomic; two racing workers may both
        claim ``v``, which only means ``v`` is scanned twice.
        """
        if self.flags[v]:
            return False
        self.flags[v] = 1
        return True


class AtomicMin:
    """Shared integer that can only decrease (CAS-min)."""

    def __init__(self, value: int):
        self.value = value
        self._lock = threading.Lock()

    def lower(self, candidate: int) -> bool:
        if candidate >= self.value:
            return False
        with self._lock:
            if candidate < self.value:
                self.value = candidate
                return True
            return False


@dataclass
class WorkerContext:
    """Private state of one worker: its queue, ``r`` values, local visits and blacklist."""

    wid: int
    start: int
    n: int
    cap: int
    queue_kind: str
    alpha: int = 0
    scanned: int = 0
    blacklisted: int = 0
    unions: int = 0
    best_alpha: int | None = None
    best_prefix: int = 0
    order: list[int] = field(default_factory=list)
    r: list[int] = field(init=False, repr=False)
    local: bytearray = field(init=False, repr=False)
    blacklist: bytearray = field(init=False, repr=False)
    pq: BoundedPQ = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.r = [0] * self.n
        self.local = bytearray(self.n)
        self.blacklist = bytearray(self.n)
        self.pq = make_queue(self.queue_kind, self.n, self.cap)

    @property
    def pq_updates(self) -> int:
        return self.pq.updates


def lambda_from_alpha(ctx: WorkerContext) -> int | None:
    """Cut value around the worker's scanned set, if that set is a proper subset."""
    if 0 < ctx.scanned < ctx.n:
        return ctx.alpha
    return None


@dataclass
class _Shared:
    graph: Graph
    visited: SharedVisited
    union_find: ConcurrentUnionFind
    lam: AtomicMin


def _worker(shared: _Shared, ctx: WorkerContext) -> Iterator[None]:
    """Scan loop of one worker; yields before every access to shared state."""
    g = shared.graph
    xadj, adjncy, adjwgt, degree = g.xadj, g.adjncy, g.adjwgt, g.degree
    claim = shared.visited.claim
    uf = shared.union_find
    lam_box = shared.lam
    r, local, blacklist, pq = ctx.r, ctx.local, ctx.blacklist, ctx.pq
    in_queue = pq._prio
    pq.insert(ctx.start, 0)
    while len(pq):
        x, _ = pq.pop_max()
        local[x] = 1
        yield
        if not claim(x):
            blacklist[x] = 1
            ctx.blacklisted += 1
            continue
        ctx.scanned += 1
        ctx.order.append(x)
        ctx.alpha += degree[x] - 2 * r[x]
        cand = lambda_from_alpha(ctx)
        if cand is not None:
            if ctx.best_alpha is None or cand < ctx.best_alpha:
                ctx.best_alpha = cand
                ctx.best_prefix = ctx.scanned
            lam_box.lower(cand)
        lam = lam_box.value
        for i in range(xadj[x], xadj[x + 1]):
            y = adjncy[i]
            if local[y] or blacklist[y]:
                continue
            ry = r[y]
            nr = ry + adjwgt[i]
            if ry < lam <= nr and uf.union(x, y):
                ctx.unions += 1
            r[y] = nr
            if in_queue[y] >= 0:
                pq.increase_key(y, nr)
            else:
                pq.insert(y, nr)


class ScheduleStopped(Exception):
    """Raised when a :class:`DeterministicScheduler` reaches ``max_steps``."""


class DeterministicScheduler:
    """Single-threaded interleaving of worker steps.

    Every worker is first advanced to its first shared access; each
    scheduled step then runs one worker from one shared access to the next.
    ``order`` fixes the first choices (worker ids; entries naming a finished
    worker fall through to the rule below). After that the scheduler picks
    uniformly among live workers with ``random.Random(seed)``, or the lowest
    live id when ``seed`` is ``None``. ``trace`` records, per step, the live
    worker ids and the id chosen.

    With ``max_steps`` set, the run stops after that many steps by raising
    :class:`ScheduleStopped`; ``live``, ``shared`` and ``contexts`` then
    describe the paused state.
    """

    def __init__(self, order: Sequence[int] = (), seed: int | None = None,
                 max_steps: int | None = None):
        self.order = list(order)
        self._rng = random.Random(seed) if seed is not None else None
        self.max_steps = max_steps
        self.trace: list[tuple[tuple[int, ...], int]] = []
        self.live: list[int] = []
        self.shared = None
        self.contexts: list[WorkerContext] = []

    def choose(self, step: int, live: Sequence[int]) -> int:
        if step < len(self.order) and self.order[step] in live:
            pick = self.order[step]
        elif self._rng is not None:
            pick = live[self._rng.randrange(len(live))]
        else:
            pick = live[0]
        self.trace.append((tuple(live), pick))
        return pick

    def run(self, workers: dict[int, Iterator[None]]) -> None:
        live = {}
        # the first step of a worker only touches private state
        for wid, gen in workers.items():
            try:
                next(gen)
                live[wid] = gen
            except StopIteration:
                pass
        step = 0
        while live:
            self.live = sorted(live)
            if self.max_steps is not None and step >= self.max_steps:
                raise ScheduleStopped(step)
            wid = self.choose(step, self.live)
            try:
                next(live[wid])
            except StopIteration:
                del live[wid]
            step += 1
        self.live = []


def _run_threads(gens: dict[int, Iterator[None]]) -> None:
    if len(gens) == 1:
        for _ in next(iter(gens.values())):
            pass
        return
    errors: list[BaseException] = []

    def drain(gen: Iterator[None]) -> None:
        try:
            for _ in gen:
                pass
        except BaseException as exc:  # surfaced in the caller's thread
            errors.append(exc)

    threads = [threading.Thread(target=drain, args=(g,), daemon=True) for g in gens.values()]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    if errors:
        raise errors[0]


def parallel_capforest(
    graph: Graph,
    lambda_hat: int,
    workers: int | None = None,
    seed: int | None = None,
    queue_kind: str = "heap",
    *,
    capped: bool = True,
    starts: Sequence[int] | None = None,
    scheduler: DeterministicScheduler | Callable[[dict], None] | None = None,
) -> ScanResult:
    """Mark contractible edges with ``workers`` concurrent capped scans.

    Start vertices are drawn in worker order from ``random.Random(seed)``
    unless given in ``starts``. The returned union-find may contain no
    unions at all; the caller then falls back to a sequential scan.
    """
    n = graph.n
    if lambda_hat < 1:
        raise ContractError("lambda_hat must be at least 1")
    if workers is None:
        workers = default_workers()
    if workers < 1:
        raise ContractError("need at least one worker")
    uf = ConcurrentUnionFind(n)
    if n == 0:
        return ScanResult(uf, lambda_hat, 0)
    if starts is None:
        rng = random.Random(seed)
        starts = [random_start(rng, n) for _ in range(workers)]
    elif len(starts) != workers:
        raise ContractError("need one start vertex per worker")

    cap = queue_cap(graph, lambda_hat, capped)
    shared = _Shared(graph, SharedVisited(n), uf, AtomicMin(lambda_hat))
    contexts = [WorkerContext(w, starts[w], n, cap, queue_kind) for w in range(workers)]
    gens = {ctx.wid: _worker(shared, ctx) for ctx in contexts}
    if scheduler is None:
        _run_threads(gens)
    elif isinstance(scheduler, DeterministicScheduler):
        scheduler.shared, scheduler.contexts = shared, contexts
        scheduler.run(gens)
    else:
        scheduler(gens)

    if sum(ctx.scanned for ctx in contexts) < n and not _all_claimed(shared.visited, n):
        raise ContractError("graph is disconnected; scan reached only part of it")

    lam = shared.lam.value
    witness = None
    if lam < lambda_hat:
        for ctx in contexts:
            if ctx.best_alpha == lam:
                witness = ctx.order[:ctx.best_prefix]
                break
    unions = sum(ctx.unions for ctx in contexts)
    return ScanResult(uf, lam, unions, witness, sum(c.pq_updates for c in contexts),
                      workers=contexts)


def _all_claimed(visited: SharedVisited, n: int) -> bool:
    return visited.flags.count(1) == n
