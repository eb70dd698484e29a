"""Exhaustive search for star and path factors.

This is the constructive side of the package and shares nothing with the
characterization deciders in :mod:`k1rfactors.analysis`, so the two can be
checked against each other.  Searches always branch on the lowest-indexed
uncovered vertex and try its possible components in a fixed order, so the
first factor found is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError, is_connected, iter_bits

ORACLE_CAP = 16


@dataclass(frozen=True)
class Family:
    """Allowed component shapes: stars K_{1,1..param} or paths of order >= param."""

    kind: str  # "star" or "path"
    param: int
    name: str

    @classmethod
    def stars(cls, n: int) -> Family:
        if n < 2:
            raise GraphError(f"S_n needs n >= 2, got {n}")
        return cls("star", n, f"S{n}")

    @classmethod
    def paths(cls, k: int) -> Family:
        if k not in (2, 3):
            raise GraphError(f"only P>=2 and P>=3 path families are supported, got k={k}")
        return cls("path", k, f"P>={k}")

    @classmethod
    def p2p3(cls) -> Family:
        # {P2, P3} = {K_{1,1}, K_{1,2}}
        return cls("star", 2, "{P2,P3}")


@dataclass(frozen=True)
class FactorComponent:
    kind: str  # "path" (vertices in path order) or "star" (centre first)
    vertices: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        if self.kind == "path":
            pairs = zip(vs, vs[1:])
        else:
            pairs = ((vs[0], leaf) for leaf in vs[1:])
        return [(min(a, b), max(a, b)) for a, b in pairs]


@dataclass(frozen=True)
class Factor:
    components: tuple[FactorComponent, ...]
    family: Family

    def edges(self) -> set[tuple[int, int]]:
        return {e for c in self.components for e in c.edges()}

    def as_dict(self) -> dict:
        return {
            "family": self.family.name,
            "components": [{"kind": c.kind, "vertices": list(c.vertices)} for c in self.components],
        }


def verify_factor(G: Graph, f: Factor) -> bool:
    """Check that ``f`` is a spanning factor of ``G`` from its family."""
    seen: set[int] = set()
    for comp in f.components:
        vs = comp.vertices
        if comp.kind != f.family.kind:
            return False
        if any(not (isinstance(v, int) and 0 <= v < G.n) for v in vs) or seen.intersection(vs):
            return False
        if len(set(vs)) != len(vs):
            return False
        seen.update(vs)
        if comp.kind == "star":
            if not 2 <= len(vs) <= f.family.param + 1:
                return False
        elif len(vs) < f.family.param:
            return False
        if not all(G.has_edge(a, b) for a, b in comp.edges()):
            return False
    return len(seen) == G.n


# -- candidate components ---------------------------------------------------

def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _stars_through(adj: tuple[int, ...], v: int, free: int, n: int) -> Iterator[tuple[int, ...]]:
    """Stars inside ``free`` containing ``v``: first with ``v`` as centre,
    then with ``v`` as a leaf of a larger star."""
    nbrs = list(iter_bits(adj[v] & free))
    for size in range(1, n + 1):
        for leaves in combinations(nbrs, size):
            yield (v,) + leaves
    for c in nbrs:
        others = list(iter_bits(adj[c] & free & ~(1 << v)))
        for size in range(1, n):
            for rest in combinations(others, size):
                yield (c,) + tuple(sorted((v,) + rest))


def _arms(adj: tuple[int, ...], start: int, free: int) -> Iterator[tuple[int, ...]]:
    """Every simple path in ``free`` beginning at ``start``, depth first."""
    stack = [((start,), free & ~(1 << start))]
    while stack:
        path, avail = stack.pop()
        yield path
        nxt = list(iter_bits(adj[path[-1]] & avail))
        for w in reversed(nxt):
            stack.append((path + (w,), avail & ~(1 << w)))


def _paths_through(adj: tuple[int, ...], v: int, free: int, k: int) -> Iterator[tuple[int, ...]]:
    """Each simple path of order >= k inside ``free`` containing ``v``, once."""
    for arm in _arms(adj, v, free):
        if len(arm) >= k:
            yield arm
        if len(arm) < 2:
            continue
        rest = free & ~_mask(arm[1:])
        for other in _arms(adj, v, rest):
            if len(other) >= 2 and other[1] > arm[1] and len(arm) + len(other) - 1 >= k:
                yield other[::-1] + arm[1:]


def _components_through(G: Graph, v: int, free: int, family: Family) -> Iterator[FactorComponent]:
    if family.kind == "star":
        for vs in _stars_through(G.adj, v, free, family.param):
            yield FactorComponent("star", vs)
    else:
        for vs in _paths_through(G.adj, v, free, family.param):
            yield FactorComponent("path", vs)


def _components_on_edge(G: Graph, e: tuple[int, int], family: Family) -> Iterator[FactorComponent]:
    """Components of the family having ``e`` as one of their own edges."""
    u, v = sorted(e)
    adj, full = G.adj, G.full_mask
    if family.kind == "star":
        for centre, leaf in ((u, v), (v, u)):
            others = list(iter_bits(adj[centre] & ~(1 << leaf)))
            for size in range(0, family.param):
                if centre == v and size == 0:
                    continue  # K2 on e already produced
                for rest in combinations(others, size):
                    yield FactorComponent("star", (centre,) + tuple(sorted((leaf,) + rest)))
    else:
        for left in _arms(G.adj, u, full & ~(1 << v)):
            right_free = full & ~_mask(left)
            for right in _arms(G.adj, v, right_free):
                if len(left) + len(right) >= family.param:
                    yield FactorComponent("path", left[::-1] + right)


# -- searches ---------------------------------------------------------------

def _check_cap(G: Graph, cap: int) -> None:
    if G.n > cap:
        raise GraphError(f"exhaustive factor search capped at {cap} vertices, got {G.n}")


class _Solver:
    """Memoised cover-the-rest search for one graph and family."""

    def __init__(self, G: Graph, family: Family) -> None:
        self.G = G
        self.family = family
        self.memo: dict[int, tuple[FactorComponent, ...] | None] = {0: ()}

    def solve(self, free: int) -> tuple[FactorComponent, ...] | None:
        if free in self.memo:
            return self.memo[free]
        v = (free & -free).bit_length() - 1
        found = None
        for comp in _components_through(self.G, v, free, self.family):
            tail = self.solve(free & ~_mask(comp.vertices))
            if tail is not None:
                found = (comp,) + tail
                break
        self.memo[free] = found
        return found


def find_factor(G: Graph, family: Family, *, cap: int = ORACLE_CAP) -> Factor | None:
    _check_cap(G, cap)
    comps = _Solver(G, family).solve(G.full_mask)
    return None if comps is None else Factor(comps, family)


def find_sn_factor(G: Graph, n: int, *, cap: int = ORACLE_CAP) -> Factor | None:
    return find_factor(G, Family.stars(n), cap=cap)


def find_pgek_factor(G: Graph, k: int, *, cap: int = ORACLE_CAP) -> Factor | None:
    return find_factor(G, Family.paths(k), cap=cap)


def find_factor_covering_edge(G: Graph, family: Family, e: tuple[int, int], *,
                              cap: int = ORACLE_CAP, _solver: _Solver | None = None) -> Factor | None:
    """A factor of the family in which ``e`` is an edge of some component."""
    u, v = e
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise GraphError(f"{e} is not an edge of the graph")
    _check_cap(G, cap)
    solver = _solver or _Solver(G, family)
    for comp in _components_on_edge(G, (u, v), family):
        rest = solver.solve(G.full_mask & ~_mask(comp.vertices))
        if rest is not None:
            ordered = sorted((comp,) + rest, key=lambda c: min(c.vertices))
            return Factor(tuple(ordered), family)
    return None


def is_covered_bruteforce(G: Graph, family: Family, *, cap: int = ORACLE_CAP) -> bool:
    """True iff ``G`` has a factor of the family and every edge lies in one.

    The first clause only matters for K1, which has no edge to cover but no
    factor either.
    """
    if not is_connected(G):
        raise GraphError("covered-graph search needs a connected graph")
    _check_cap(G, cap)
    solver = _Solver(G, family)
    if solver.solve(G.full_mask) is None:
        return False
    return all(find_factor_covering_edge(G, family, e, cap=cap, _solver=solver) is not None
               for e in G.edges())


__all__ = [
    "ORACLE_CAP",
    "Factor",
    "FactorComponent",
    "Family",
    "find_factor",
    "find_factor_covering_edge",
    "find_pgek_factor",
    "find_sn_factor",
    "is_covered_bruteforce",
    "verify_factor",
]
