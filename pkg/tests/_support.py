"""Shared helpers for the test suite: instance families and a schedule explorer."""
from __future__ import annotations

from dataclasses import dataclass

from mincut import generators as gen
from mincut.contraction import contract
from mincut.driver import DriverConfig, exact_mincut
from mincut.graph import Graph
from mincut.parallel_scan import DeterministicScheduler, ScheduleStopped, parallel_capforest
from mincut.pqueues import BottomUpHeap

GNP_SIZES = (16, 32, 48, 64, 128)

# one "PASS"/"FAIL"/"WARN" line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def report(label: str, ok: bool | None, detail: str) -> str:
    status = "WARN" if ok is None else "PASS" if ok else "FAIL"
    line = f"[{status}] {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def gnp_probability(n: int) -> float:
    # about eight expected neighbors, denser for the small sizes
    return min(0.3, 8 / n)


def instance(cls: str, seed: int) -> Graph:
    """Seeded instance of one acceptance class."""
    if cls == "tree":
        return gen.random_tree(4 + seed % 29, seed)
    if cls == "cycle":
        return gen.random_cycle(3 + seed % 30, seed)
    if cls.startswith("gnp"):
        n = int(cls[3:])
        return gen.gnp(n, gnp_probability(n), seed)
    if cls == "clique_bridge":
        return gen.random_clique_bridge(seed)
    if cls == "disconnected":
        return gen.disconnected_union(seed)
    raise ValueError(cls)


CLASSES = ("tree", "cycle") + tuple(f"gnp{n}" for n in GNP_SIZES) + ("clique_bridge", "disconnected")


def _queue_state(pq) -> tuple:
    if isinstance(pq, BottomUpHeap):
        return tuple((v, pq._prio[v]) for v in pq._heap[1:])
    live = []
    for p, bucket in enumerate(pq._buckets):
        entries = tuple(t % pq.n for t in bucket if pq._ticket[t % pq.n] == t)
        if entries:
            live.append((p, entries))
    return tuple(live)


def _snapshot(sch: DeterministicScheduler) -> tuple:
    shared = sch.shared
    uf = shared.union_find
    workers = []
    for ctx in sch.contexts:
        workers.append((
            bytes(ctx.local), bytes(ctx.blacklist), tuple(ctx.r), _queue_state(ctx.pq),
            ctx.alpha, ctx.scanned, ctx.best_alpha, tuple(ctx.order[:ctx.best_prefix]),
            tuple(ctx.order), ctx.wid in sch.live,
        ))
    return (bytes(shared.visited.flags), shared.lam.value,
            tuple(uf.find(v) for v in range(len(shared.visited.flags))), tuple(workers))


@dataclass
class Exploration:
    states: int
    finals: list


def explore_schedules(graph: Graph, lambda_hat: int, starts: list[int],
                      queue_kind: str = "heap", capped: bool = True) -> Exploration:
    """Run the parallel scan under every interleaving of its workers.

    Schedules are enumerated depth first by replaying prefixes; prefixes that
    reach an already seen state are pruned, so every reachable state is
    expanded once. Returns the scan result of every terminal schedule found.
    """
    seen: set = set()
    finals = []
    stack: list[list[int]] = [[]]
    while stack:
        prefix = stack.pop()
        sch = DeterministicScheduler(prefix, max_steps=len(prefix))
        try:
            res = parallel_capforest(graph, lambda_hat, len(starts), queue_kind=queue_kind,
                                     capped=capped, starts=starts, scheduler=sch)
        except ScheduleStopped:
            key = _snapshot(sch)
            if key in seen:
                continue
            seen.add(key)
            stack.extend(prefix + [w] for w in sch.live)
            continue
        finals.append(res)
    return Exploration(len(seen), finals)


def value_after_scan(graph: Graph, scan) -> int:
    """Cut value the driver reaches from this scan: contract, then solve the rest."""
    res = contract(graph, scan.union_find, 1, scan.lambda_hat)
    lam = res.lambda_hat
    if res.graph.n >= 2:
        rest = exact_mincut(res.graph, DriverConfig(workers=1, bound="mindeg"))
        lam = min(lam, rest.value)
    return lam
