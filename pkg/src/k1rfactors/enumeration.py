"""Exhaustive small-graph populations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import canonical_form, canonical_graph
from .graph import Graph, GraphError, is_connected, popcount
from .io import parse_graph6

ENUM_MAX_N = 9


@dataclass(frozen=True)
class SweepConfig:
    """Which graphs a sweep visits and how the work is split.

    ``jobs`` only affects scheduling; results are identical for any width.
    """

    max_vertices: int
    min_vertices: int = 1
    dedup: bool = True
    connected_only: bool = False
    jobs: int = 1
    chunk_size: int = 256

    def __post_init__(self) -> None:
        if not 0 <= self.min_vertices <= self.max_vertices:
            raise GraphError("need 0 <= min_vertices <= max_vertices")
        if self.max_vertices > ENUM_MAX_N:
            raise GraphError(
                f"built-in enumeration is capped at {ENUM_MAX_N} vertices; "
                "feed larger populations as graph6")
        if self.jobs < 1 or self.chunk_size < 1:
            raise GraphError("jobs and chunk_size must be positive")

    def describe(self) -> dict:
        """Config fields that determine the result (``jobs`` excluded)."""
        return {
            "max_vertices": self.max_vertices,
            "min_vertices": self.min_vertices,
            "dedup": self.dedup,
            "connected_only": self.connected_only,
        }


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labelled graphs on ``n`` vertices, bitmask order."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        adj = [0] * n
        bit = 0
        while code:
            if code & 1:
                i, j = pairs[bit]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            code >>= 1
            bit += 1
        yield Graph(n, tuple(adj))


@lru_cache(maxsize=None)
def _class_labels(n: int) -> tuple[bytes, ...]:
    """Canonical labels of every isomorphism class on ``n`` vertices, sorted.

    Classes on ``n`` vertices are grown from those on ``n - 1`` by adding a
    vertex of minimum degree: deleting a minimum-degree vertex from any graph
    gives a smaller graph, so every class is reached.
    """
    if n <= 1:
        return (canonical_form(Graph(n, (0,) * n)),)
    seen: set[bytes] = set()
    for label in _class_labels(n - 1):
        parent = parse_graph6(label.decode("ascii"))
        degs = [popcount(nb) for nb in parent.adj]
        low = min(degs)
        for size in range(0, min(low + 1, n - 1) + 1):
            for S in combinations(range(n - 1), size):
                members = set(S)
                if any(size > degs[x] + (x in members) for x in range(n - 1)):
                    continue
                adj = list(parent.adj) + [0]
                for x in S:
                    adj[x] |= 1 << (n - 1)
                    adj[n - 1] |= 1 << x
                seen.add(canonical_form(Graph(n, tuple(adj))))
    return tuple(sorted(seen))


def isomorphism_classes(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    if n > ENUM_MAX_N:
        raise GraphError(f"enumeration capped at {ENUM_MAX_N} vertices")
    return [parse_graph6(label.decode("ascii")) for label in _class_labels(n)]


def enumerate_graphs(config: SweepConfig) -> Iterator[Graph]:
    """Graphs with ``min_vertices..max_vertices`` vertices, by vertex count.

    With ``dedup`` each isomorphism class appears once (as its canonical
    relabelling, in label order); otherwise every labelled graph appears.
    """
    for n in range(config.min_vertices, config.max_vertices + 1):
        population = isomorphism_classes(n) if config.dedup else labeled_graphs(n)
        for G in population:
            if config.connected_only and not is_connected(G):
                continue
            yield G


__all__ = [
    "ENUM_MAX_N",
    "SweepConfig",
    "canonical_graph",
    "enumerate_graphs",
    "isomorphism_classes",
    "labeled_graphs",
]
