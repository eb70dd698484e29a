"""graph6 and plain edge-list readers/writers."""

from __future__ import annotations

import logging
from typing import Iterable, Iterator

from .graph import Graph, GraphError

log = logging.getLogger(__name__)

GRAPH6_MAX_N = 62


class ParseError(GraphError):
    """Malformed graph input.  ``offset`` is the byte (graph6) or line
    (edge list) where parsing stopped."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


def _upper_triangle(n: int) -> Iterator[tuple[int, int]]:
    # graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(G: Graph) -> str:
    if G.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 writer supports at most {GRAPH6_MAX_N} vertices")
    out = [chr(G.n + 63)]
    acc = 0
    nbits = 0
    for i, j in _upper_triangle(G.n):
        acc = (acc << 1) | (G.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 record (an optional ``>>graph6<<`` header and the
    trailing newline are tolerated)."""
    line = text.rstrip("\r\n")
    start = 0
    if line.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    if len(line) <= start:
        raise ParseError("empty graph6 record", start)
    for pos in range(start, len(line)):
        if not 63 <= ord(line[pos]) <= 126:
            raise ParseError(f"byte {line[pos]!r} outside the graph6 range", pos)
    n = ord(line[start]) - 63
    if n > GRAPH6_MAX_N:
        raise ParseError("multi-byte size headers are not supported", start)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    body = line[start + 1:]
    if len(body) + 1 < expected:
        raise ParseError(f"truncated record: expected {expected} bytes", len(line))
    if len(body) + 1 > expected:
        raise ParseError("trailing bytes after adjacency data", start + expected)
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    adj = [0] * n
    for bit, (i, j) in zip(bits, _upper_triangle(n)):
        if bit:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line.strip())


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Duplicate edges are collapsed (with a logged warning); self-loops and
    out-of-range endpoints are errors.
    """
    rows = [(no, line.split()) for no, line in enumerate(text.splitlines(), 1)]
    rows = [(no, parts) for no, parts in rows if parts and not parts[0].startswith("#")]
    if not rows:
        raise ParseError("missing 'n m' header", 1)
    no, header = rows[0]
    if len(header) != 2:
        raise ParseError("header must be 'n m'", no)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header must contain two integers", no) from None
    if n < 0 or m < 0:
        raise ParseError("negative size in header", no)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} lines follow", no)
    seen: set[tuple[int, int]] = set()
    for no, parts in body:
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}", no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            log.warning("duplicate edge %s collapsed (line %d)", key, no)
        seen.add(key)
    return Graph.from_edges(n, sorted(seen))


def write_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
