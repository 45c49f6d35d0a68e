"""Upper bounds for the minimum cut, used to seed the exact solver.

Both providers return the weight of a concrete cut together with one of its
sides, so the value can never undershoot the true minimum cut.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .contraction import contract
from .errors import InputError
from .graph import Graph, VertexMap, connected_components, min_degree_vertex
from .union_find import UnionFind

BOUND_METHODS = ("mindeg", "lp")


@dataclass
class BoundResult:
    value: int
    witness: list[int]
    method: str
    levels: list[int] = field(default_factory=list)


@dataclass
class LabelPropagationConfig:
    iterations: int = 3
    threshold: int = 1024
    seed: int = 0
    queue_kind: str = "heap"
    max_levels: int = 64


def min_degree_bound(graph: Graph) -> BoundResult:
    """The trivial cut around a minimum-degree vertex."""
    if graph.n < 2:
        raise InputError("a cut needs at least two vertices")
    v, d = min_degree_vertex(graph)
    return BoundResult(d, [v], "mindeg")


def label_propagation(graph: Graph, iterations: int = 3, seed: int = 0) -> list[int]:
    """Cluster labels from ``iterations`` rounds of label propagation.

    Labels start as vertex ids. Each round visits the vertices in a fresh
    random order and moves each to the label with the largest total edge
    weight among its neighbors, the smallest label winning ties.
    """
    if iterations < 1:
        raise InputError("iterations must be at least 1")
    n = graph.n
    xadj, adjncy, adjwgt = graph.xadj, graph.adjncy, graph.adjwgt
    label = list(range(n))
    rng = random.Random(seed)
    order = list(range(n))
    for _ in range(iterations):
        rng.shuffle(order)
        for v in order:
            lo, hi = xadj[v], xadj[v + 1]
            if lo == hi:
                continue
            score: dict[int, int] = {}
            for i in range(lo, hi):
                lab = label[adjncy[i]]
                score[lab] = score.get(lab, 0) + adjwgt[i]
            best = max(score.items(), key=lambda kv: (kv[1], -kv[0]))
            label[v] = best[0]
    return label


def inexact_bound(graph: Graph, config: LabelPropagationConfig | None = None) -> BoundResult:
    """Multilevel label-propagation bound.

    Clusters found by label propagation are contracted level by level, and
    every collapsed vertex's degree is a candidate cut. Once the graph has at
    most ``config.threshold`` vertices (or stops shrinking) it is solved
    exactly. The best cut seen anywhere is returned in original ids.
    """
    from .driver import DriverConfig, exact_mincut

    cfg = config or LabelPropagationConfig()
    if graph.n < 2:
        raise InputError("a cut needs at least two vertices")
    comps = connected_components(graph)
    if len(comps) > 1:
        return BoundResult(0, comps[0], "lp")

    best = min_degree_bound(graph)
    best = BoundResult(best.value, best.witness, "lp")
    current = graph
    to_orig = VertexMap.identity(graph.n)
    rng = random.Random(cfg.seed)
    levels = [graph.n]
    for _ in range(cfg.max_levels):
        if current.n <= cfg.threshold:
            break
        labels = label_propagation(current, cfg.iterations, rng.randrange(1 << 30))
        uf = UnionFind(current.n)
        first: dict[int, int] = {}
        for v, lab in enumerate(labels):
            if lab in first:
                uf.union(first[lab], v)
            else:
                first[lab] = v
        if uf.n_sets == current.n or uf.n_sets < 2:
            break
        res = contract(current, uf, lambda_hat=best.value)
        to_orig = to_orig.then(res.vertex_map)
        if res.witness is not None:
            v = res.block_of[res.witness[0]]
            best = BoundResult(res.lambda_hat, to_orig.originals([v]), "lp")
        current = res.graph
        levels.append(current.n)

    exact = exact_mincut(current, DriverConfig(queue=cfg.queue_kind, workers=1, seed=cfg.seed,
                                               bound="mindeg", emit_partition=True))
    if exact.value < best.value:
        best = BoundResult(exact.value, to_orig.originals(exact.partition), "lp")
    best.witness = sorted(best.witness)
    best.levels = levels
    return best

