"""graph6 codec (the format emitted by nauty's ``geng``).

Only undirected simple graphs are handled; sparse6 and digraph6 are not.
"""

from __future__ import annotations

import gzip
import io
from pathlib import Path
from typing import Iterator

from .graph import DEFAULT_VERTEX_CAP, Graph, GraphError, VertexCapError

HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 68719476735


class Graph6Error(GraphError):
    """Malformed graph6 record."""


class Graph6LengthError(Graph6Error):
    """The size field or the data length does not match the format."""


class Graph6PaddingError(Graph6Error):
    """Padding bits at the end of the record are not zero."""


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6LengthError("empty record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6LengthError("truncated 36-bit size field")
        chunks, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6LengthError("truncated 18-bit size field")
        chunks, start = data[1:4], 4
    n = 0
    for c in chunks:
        n = (n << 6) | (c - 63)
    return n, start


def parse_graph6(line: str | bytes, *, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Decode one graph6 record (no header, surrounding whitespace ignored)."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error(f"invalid graph6 character in {data!r}")
    n, start = _decode_order(data)
    if n > cap:
        raise VertexCapError(f"graph6 record has {n} vertices, cap is {cap}")
    nbits = n * (n - 1) // 2
    body = data[start:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6LengthError(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = len(body) * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges, cap=cap)


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 record without header or newline."""
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise Graph6LengthError(f"n={n} exceeds the graph6 limit")
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        out = ["~~"] + [chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)]
    value = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            value = (value << 1) | (g.adj[i] >> j & 1)
            nbits += 1
    pad = (-nbits) % 6
    value <<= pad
    nbits += pad
    for s in range(nbits - 6, -1, -6):
        out.append(chr(((value >> s) & 63) + 63))
    return "".join(out)


def _open_text(path: Path) -> io.TextIOBase:
    if path.suffix == ".gz":
        return io.TextIOWrapper(gzip.open(path, "rb"), encoding="ascii")
    return open(path, encoding="ascii")


def iter_graph6_lines(path: str | Path) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` for the non-blank records of a file.

    A leading ``>>graph6<<`` header is tolerated; ``.gz`` files are read
    transparently.
    """
    path = Path(path)
    with _open_text(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            rec = raw.strip()
            if rec.startswith(HEADER):
                rec = rec[len(HEADER):]
            if rec:
                yield lineno, rec


def read_graph6_file(path: str | Path, *, cap: int = DEFAULT_VERTEX_CAP) -> Iterator[Graph]:
    for lineno, rec in iter_graph6_lines(path):
        try:
            yield parse_graph6(rec, cap=cap)
        except GraphError as exc:
            raise type(exc)(f"{path}:{lineno}: {exc}") from exc
