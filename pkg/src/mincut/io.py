"""Graph file readers and writers: METIS adjacency format and plain edge lists."""
from __future__ import annotations

import os
from pathlib import Path
from typing import Iterator

from .errors import InputError
from .graph import Graph, build_graph_arrays

FORMATS = ("metis", "edgelist")
_METIS_SUFFIXES = {".metis", ".graph", ".gr"}


def _content_lines(path: Path) -> Iterator[tuple[int, str]]:
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if line.startswith("%") or line.startswith("#"):
                continue
            yield lineno, line


def read_metis(path: str | os.PathLike) -> Graph:
    """Read a METIS graph file.

    Header ``n m [fmt [ncon]]``; line ``i`` after the header lists the
    1-indexed neighbors of vertex ``i``. The last digit of ``fmt`` flags edge
    weights (neighbor/weight pairs), the second-to-last flags ``ncon`` vertex
    weights at the start of each line, which are skipped.
    """
    path = Path(path)
    lines = _content_lines(path)
    header = None
    for lineno, line in lines:
        if line:
            header = (lineno, line.split())
            break
    if header is None:
        raise InputError(f"{path}: missing METIS header")
    lineno, fields = header
    if len(fields) < 2:
        raise InputError(f"{path}:{lineno}: header needs at least 'n m'")
    try:
        n, m = int(fields[0]), int(fields[1])
        fmt = fields[2] if len(fields) > 2 else "0"
        ncon = int(fields[3]) if len(fields) > 3 else 1
    except ValueError:
        raise InputError(f"{path}:{lineno}: malformed header {' '.join(fields)!r}") from None
    if not set(fmt) <= {"0", "1"} or len(fmt) > 3:
        raise InputError(f"{path}:{lineno}: unsupported fmt {fmt!r}")
    fmt = fmt.zfill(3)
    edge_weights = fmt[2] == "1"
    vertex_weights = ncon if fmt[1] == "1" else 0

    us: list[int] = []
    vs: list[int] = []
    ws: list[int] = []
    u = 0
    for lineno, line in lines:
        if u >= n:
            if line:
                raise InputError(f"{path}:{lineno}: more adjacency lines than vertices")
            continue
        try:
            tokens = [int(t) for t in line.split()][vertex_weights:]
        except ValueError:
            raise InputError(f"{path}:{lineno}: non-integer token") from None
        step = 2 if edge_weights else 1
        if len(tokens) % step:
            raise InputError(f"{path}:{lineno}: neighbor without weight")
        for j in range(0, len(tokens), step):
            v = tokens[j] - 1
            if not 0 <= v < n:
                raise InputError(f"{path}:{lineno}: neighbor {tokens[j]} out of range 1..{n}")
            w = tokens[j + 1] if edge_weights else 1
            if w < 0:
                raise InputError(f"{path}:{lineno}: negative edge weight")
            us.append(u)
            vs.append(v)
            ws.append(w)
        u += 1
    if u < n:
        raise InputError(f"{path}: expected {n} adjacency lines, found {u}")
    graph = build_graph_arrays(n, us, vs, ws)
    listed = sum(1 for a, b in zip(us, vs) if a != b) // 2
    if listed != m:
        raise InputError(f"{path}: header declares {m} edges, adjacency lists {listed}")
    return graph


def read_edge_list(path: str | os.PathLike, n: int | None = None) -> Graph:
    """Read whitespace-separated ``u v [w]`` lines with 0-indexed ids (default ``w = 1``)."""
    path = Path(path)
    us: list[int] = []
    vs: list[int] = []
    ws: list[int] = []
    for lineno, line in _content_lines(path):
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise InputError(f"{path}:{lineno}: expected 'u v [w]', got {line!r}")
        try:
            vals = [int(f) for f in fields]
        except ValueError:
            raise InputError(f"{path}:{lineno}: non-integer token in {line!r}") from None
        if vals[0] < 0 or vals[1] < 0:
            raise InputError(f"{path}:{lineno}: negative vertex id")
        if len(vals) == 3 and vals[2] < 0:
            raise InputError(f"{path}:{lineno}: negative edge weight")
        us.append(vals[0])
        vs.append(vals[1])
        ws.append(vals[2] if len(vals) == 3 else 1)
    if n is None:
        n = max(max(us, default=-1), max(vs, default=-1)) + 1
    return build_graph_arrays(n, us, vs, ws)


def guess_format(path: str | os.PathLike) -> str:
    return "metis" if Path(path).suffix.lower() in _METIS_SUFFIXES else "edgelist"


def load_graph(path: str | os.PathLike, fmt: str | None = None) -> Graph:
    fmt = fmt or guess_format(path)
    if fmt == "metis":
        return read_metis(path)
    if fmt == "edgelist":
        return read_edge_list(path)
    raise InputError(f"unknown graph format {fmt!r} (expected one of {', '.join(FORMATS)})")


def write_metis(graph: Graph, path: str | os.PathLike) -> None:
    weighted = any(w != 1 for w in graph.adjwgt)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{graph.n} {graph.m}{' 1' if weighted else ''}\n")
        for v in range(graph.n):
            if weighted:
                parts = [f"{u + 1} {w}" for u, w in graph.neighbors(v)]
            else:
                parts = [str(u + 1) for u, _ in graph.neighbors(v)]
            fh.write(" ".join(parts) + "\n")


def write_edge_list(graph: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for u, v, w in graph.edges():
            fh.write(f"{u} {v} {w}\n")
