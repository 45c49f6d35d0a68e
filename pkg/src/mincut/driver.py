"""Exact minimum cut: bound, then alternate parallel scans and contractions."""
from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .bound import BOUND_METHODS, LabelPropagationConfig, inexact_bound, min_degree_bound
from .capforest import ScanResult, capforest
from .contraction import HEAVY_BETA, ContractionResult, contract
from .errors import ContractError, InputError
from .graph import Graph, VertexMap, connected_components
from .parallel_scan import default_workers, parallel_capforest
from .pqueues import QUEUE_KINDS


@dataclass
class DriverConfig:
    queue: str = "heap"
    workers: int | None = None
    seed: int = 0
    bound: str = "lp"
    capped: bool = True
    emit_partition: bool = False
    lp_iterations: int = 3
    lp_threshold: int = 1024
    heavy_beta: int = HEAVY_BETA

    def __post_init__(self) -> None:
        if self.queue not in QUEUE_KINDS:
            raise InputError(f"unknown queue {self.queue!r}; expected one of {QUEUE_KINDS}")
        if self.bound not in BOUND_METHODS:
            raise InputError(f"unknown bound {self.bound!r}; expected one of {BOUND_METHODS}")
        if self.workers is None:
            self.workers = default_workers()
        if self.workers < 1:
            raise InputError("worker count must be at least 1")


@dataclass
class RoundInfo:
    """What an observer sees after each contraction round."""

    index: int
    graph: Graph
    lambda_hat: int
    scan: ScanResult
    contraction: ContractionResult
    fallback: bool


@dataclass
class CutResult:
    value: int
    partition: list[int] | None = None
    rounds: int = 0
    stats: dict = field(default_factory=dict)


def recover_partition(history: list[VertexMap] | None, witness: Iterable[int]) -> list[int]:
    """Map vertices of the graph after ``len(history)`` rounds back to input ids."""
    if history is None:
        raise ContractError("partition tracking was not enabled")
    ids = list(witness)
    for vmap in reversed(history):
        ids = [v for b in ids for v in vmap.inverse[b]]
    return sorted(ids)


def exact_mincut(
    graph: Graph,
    config: DriverConfig | None = None,
    *,
    observer: Callable[[RoundInfo], None] | None = None,
) -> CutResult:
    """Exact minimum cut of ``graph``.

    Disconnected graphs short-circuit to value 0. Otherwise the bound is
    seeded by the configured estimator and lowered by every cut met along
    the way: scanned-set cuts, collapsed vertices, and the final two-vertex
    cut.
    """
    cfg = config or DriverConfig()
    n = graph.n
    if n < 2:
        raise InputError("minimum cut needs at least two vertices")
    t_start = time.perf_counter()
    stats: dict = {"rounds": [], "fallbacks": 0, "pq_updates": 0, "timings": {}}

    comps = connected_components(graph)
    if len(comps) > 1:
        stats["components"] = len(comps)
        stats["timings"]["total"] = time.perf_counter() - t_start
        return CutResult(0, comps[0] if cfg.emit_partition else None, 0, stats)

    t0 = time.perf_counter()
    if cfg.bound == "lp":
        bound = inexact_bound(graph, LabelPropagationConfig(
            iterations=cfg.lp_iterations, threshold=cfg.lp_threshold,
            seed=cfg.seed, queue_kind=cfg.queue))
    else:
        bound = min_degree_bound(graph)
    stats["timings"]["bound"] = time.perf_counter() - t0
    stats["bound"] = {"method": bound.method, "value": bound.value}

    lam = bound.value
    history: list[VertexMap] | None = [] if cfg.emit_partition else None
    witness: tuple[int, list[int]] = (0, bound.witness)
    rng = random.Random(cfg.seed)
    current = graph
    round_times: list[float] = []

    while current.n > 2:
        t_round = time.perf_counter()
        level = len(stats["rounds"])
        scan = parallel_capforest(current, lam, cfg.workers, rng.randrange(1 << 31),
                                  cfg.queue, capped=cfg.capped)
        stats["pq_updates"] += scan.pq_updates
        if scan.lambda_hat < lam:
            lam = scan.lambda_hat
            witness = (level, scan.witness)
        fallback = False
        while scan.unions == 0:
            # early-terminated regions can miss every contractible edge
            fallback = True
            stats["fallbacks"] += 1
            scan = capforest(current, lam, rng.randrange(current.n), cfg.queue, capped=cfg.capped)
            stats["pq_updates"] += scan.pq_updates
            if scan.lambda_hat < lam:
                lam = scan.lambda_hat
                witness = (level, scan.witness)
            elif scan.unions == 0:
                raise ContractError("sequential scan found nothing to contract")
        lam_scan = lam
        res = contract(current, scan.union_find, cfg.workers, lam, heavy_beta=cfg.heavy_beta)
        if res.lambda_hat is not None and res.lambda_hat < lam:
            lam = res.lambda_hat
            witness = (level, res.witness)
        if history is not None:
            history.append(res.vertex_map)
        if observer is not None:
            observer(RoundInfo(level, current, lam_scan, scan, res, fallback))
        stats["rounds"].append({
            "n": current.n, "m": current.m, "unions": scan.unions,
            "fallback": fallback, "lambda_hat": lam,
        })
        current = res.graph
        round_times.append(time.perf_counter() - t_round)

    if current.n == 2:
        w = current.edge_weight(0, 1)
        if w < lam:
            lam = w
            witness = (len(stats["rounds"]), [0])

    stats["final_n"] = current.n
    stats["timings"]["rounds"] = round_times
    stats["timings"]["total"] = time.perf_counter() - t_start
    partition = None
    if history is not None:
        level, ids = witness
        partition = recover_partition(history[:level], ids)
    return CutResult(lam, partition, len(stats["rounds"]), stats)


def config_dict(cfg: DriverConfig) -> dict:
    return asdict(cfg)
