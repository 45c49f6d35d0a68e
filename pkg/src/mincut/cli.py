"""Command-line front end: ``mincut solve GRAPH [options]``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .driver import DriverConfig, exact_mincut
from .errors import ContractError, InputError
from .graph import Graph, VertexMap, k_core, largest_connected_component
from .io import FORMATS, load_graph
from .pqueues import QUEUE_KINDS

REPORT_SCHEMA = 1
CHECK_LIMIT = 256


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mincut", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    solve = sub.add_parser("solve", help="compute the exact minimum cut of a graph file")
    solve.add_argument("graph", help="input graph (METIS or edge list)")
    solve.add_argument("--format", choices=FORMATS, help="input format (default: by file suffix)")
    solve.add_argument("--queue", choices=QUEUE_KINDS, default="heap")
    solve.add_argument("--threads", type=_positive_int,
                       help="worker count (default: $MINCUT_THREADS, else CPU count)")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--bound", choices=("mindeg", "lp"), default="lp")
    solve.add_argument("--uncapped", action="store_true", help="do not cap queue priorities")
    solve.add_argument("--kcore", type=_positive_int, metavar="K", help="solve on the K-core")
    solve.add_argument("--unweighted-kcore", action="store_true",
                       help="peel by neighbor count instead of weighted degree")
    solve.add_argument("--lcc", action="store_true", help="keep only the largest component")
    solve.add_argument("--partition", metavar="FILE", help="write one side of the cut, one id per line")
    solve.add_argument("--json", action="store_true", help="print a JSON report")
    solve.add_argument("--check", action="store_true",
                       help=f"verify against Stoer-Wagner (graphs with n <= {CHECK_LIMIT})")
    solve.add_argument("--lp-iterations", type=_positive_int, default=3)
    solve.add_argument("--lp-threshold", type=_positive_int, default=1024)
    return parser


def _preprocess(graph: Graph, args, timings: dict) -> tuple[Graph, VertexMap, list[dict]]:
    steps = []
    vmap = VertexMap.identity(graph.n)
    t0 = time.perf_counter()
    if args.kcore is not None:
        graph, step = k_core(graph, args.kcore, weighted=not args.unweighted_kcore)
        vmap = vmap.then(step)
        steps.append({"step": "kcore", "k": args.kcore, "n": graph.n, "m": graph.m})
    if args.lcc:
        graph, step = largest_connected_component(graph)
        vmap = vmap.then(step)
        steps.append({"step": "lcc", "n": graph.n, "m": graph.m})
    timings["preprocess"] = time.perf_counter() - t0
    return graph, vmap, steps


def solve(args) -> tuple[int, dict]:
    timings: dict = {}
    t0 = time.perf_counter()
    graph = load_graph(args.graph, args.format)
    timings["load"] = time.perf_counter() - t0
    report: dict = {
        "schema": REPORT_SCHEMA,
        "input": str(args.graph),
        "graph": {"n": graph.n, "m": graph.m},
    }
    graph, vmap, steps = _preprocess(graph, args, timings)
    report["preprocessing"] = steps
    if graph.n < 2:
        raise InputError(f"graph has {graph.n} vertices after preprocessing; need at least 2")

    cfg = DriverConfig(queue=args.queue, workers=args.threads, seed=args.seed, bound=args.bound,
                       capped=not args.uncapped, emit_partition=args.partition is not None,
                       lp_iterations=args.lp_iterations, lp_threshold=args.lp_threshold)
    report["config"] = {
        "queue": cfg.queue, "threads": cfg.workers, "seed": cfg.seed, "bound": cfg.bound,
        "capped": cfg.capped, "lp_iterations": cfg.lp_iterations,
        "lp_threshold": cfg.lp_threshold,
    }
    result = exact_mincut(graph, cfg)
    report["value"] = result.value
    report["rounds"] = result.rounds
    report["fallbacks"] = result.stats.get("fallbacks", 0)
    report["bound"] = result.stats.get("bound")
    report["round_sizes"] = [{"n": r["n"], "m": r["m"]} for r in result.stats.get("rounds", [])]
    timings.update(result.stats.get("timings", {}))

    report["partition_file"] = None
    if args.partition is not None:
        assert result.partition is not None
        side = vmap.originals(result.partition)
        Path(args.partition).write_text("".join(f"{v}\n" for v in side), encoding="utf-8")
        report["partition_file"] = str(args.partition)
        report["partition_size"] = len(side)

    code = 0
    if args.check:
        if graph.n <= CHECK_LIMIT:
            from .oracle import oracle_global_mincut

            expected = oracle_global_mincut(graph).value
            ok = expected == result.value
            report["check"] = {"oracle": expected, "ok": ok}
            if not ok:
                code = 1
        else:
            report["check"] = {"skipped": f"n > {CHECK_LIMIT}"}
    timings["total"] = time.perf_counter() - t0
    report["timings"] = timings
    return code, report


def _human(report: dict) -> str:
    lines = [f"input: {report['input']} (n={report['graph']['n']}, m={report['graph']['m']})"]
    for step in report["preprocessing"]:
        label = f"{step['k']}-core" if step["step"] == "kcore" else "largest component"
        lines.append(f"{label}: n={step['n']}, m={step['m']}")
    c = report["config"]
    lines.append(f"config: queue={c['queue']} threads={c['threads']} seed={c['seed']} "
                 f"bound={c['bound']} capped={c['capped']}")
    if report.get("bound"):
        lines.append(f"initial bound ({report['bound']['method']}): {report['bound']['value']}")
    lines.append(f"rounds: {report['rounds']} (fallbacks: {report['fallbacks']})")
    lines.append(f"minimum cut: {report['value']}")
    if report.get("partition_file"):
        lines.append(f"partition: {report['partition_size']} vertices -> {report['partition_file']}")
    check = report.get("check")
    if check:
        if "skipped" in check:
            lines.append(f"check: skipped ({check['skipped']})")
        else:
            lines.append(f"check: oracle={check['oracle']} {'OK' if check['ok'] else 'MISMATCH'}")
    t = report["timings"]
    lines.append(f"time: total {t['total']:.3f}s (bound {t.get('bound', 0.0):.3f}s, "
                 f"{len(t.get('rounds', []))} rounds {sum(t.get('rounds', [])):.3f}s)")
    return "\n".join(lines)


def run(argv: list[str] | None = None) -> tuple[int, dict | None]:
    """Parse ``argv``, solve, print the report; returns ``(exit_code, report)``."""
    args = build_parser().parse_args(argv)
    try:
        code, report = solve(args)
    except (InputError, OSError) as exc:
        print(f"mincut: error: {exc}", file=sys.stderr)
        return 2, None
    except (ContractError, OverflowError) as exc:
        print(f"mincut: failed: {exc}", file=sys.stderr)
        return 3, None
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(_human(report))
    if code:
        print("mincut: check failed: result differs from the oracle", file=sys.stderr)
    return code, report


def main(argv: list[str] | None = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
