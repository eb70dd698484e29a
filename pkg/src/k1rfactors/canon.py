"""Canonical labels for small graphs.

The label of ``G`` is the graph6 string of the relabelling of ``G`` whose
upper-triangle adjacency bits (graph6 column order) are lexicographically
smallest over all vertex permutations.  The minimum is found by a
branch-and-bound over vertex orders: the bits contributed by position ``k``
depend only on the first ``k + 1`` vertices, so only orders whose prefix
code is minimal survive each round.  Twin vertices (equal open or closed
neighbourhoods) are interchangeable by an automorphism, so only the first
unused member of a twin pair is ever tried.
"""

from __future__ import annotations

from .graph import Graph, GraphError, relabel
from .io import write_graph6

CANON_MAX_N = 10


def _twin_blockers(G: Graph) -> list[int]:
    """``blockers[v]``: mask of lower-indexed twins of ``v``."""
    blockers = []
    for v in range(G.n):
        b = 0
        for u in range(v):
            bit_u, bit_v = 1 << u, 1 << v
            if G.adj[u] & ~bit_v == G.adj[v] & ~bit_u:
                b |= bit_u
        blockers.append(b)
    return blockers


def canonical_order(G: Graph) -> tuple[int, ...]:
    """A vertex order realising the lexicographically minimal code."""
    if G.n > CANON_MAX_N:
        raise GraphError(f"canonical form is brute force and capped at {CANON_MAX_N} vertices, got {G.n}")
    adj = G.adj
    blockers = _twin_blockers(G)
    # each partial: (order tuple, used mask)
    partials: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for _ in range(G.n):
        best = -1
        survivors: list[tuple[tuple[int, ...], int]] = []
        for order, used in partials:
            for v in range(G.n):
                bit = 1 << v
                if used & bit or blockers[v] & ~used:
                    continue
                nb = adj[v]
                block = 0
                for u in order:
                    block = (block << 1) | (nb >> u & 1)
                if best < 0 or block < best:
                    best = block
                    survivors = [(order + (v,), used | bit)]
                elif block == best:
                    survivors.append((order + (v,), used | bit))
        partials = survivors
    return partials[0][0]


def canonical_graph(G: Graph) -> Graph:
    return relabel(G, canonical_order(G))


def canonical_form(G: Graph) -> bytes:
    """Isomorphism-invariant label: equal labels iff the graphs are isomorphic."""
    return write_graph6(canonical_graph(G)).encode("ascii")
