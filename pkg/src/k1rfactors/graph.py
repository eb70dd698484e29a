"""Undirected simple graphs on dense integer vertices.

Adjacency is stored as one integer bitmask per vertex, which keeps the
subset-heavy decision procedures elsewhere in the package cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex sets."""


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  ``origin`` maps
    each vertex back to the labelling of the graph it was cut out of (see
    :func:`delete_vertices`); it does not take part in equality.
    """

    n: int
    adj: tuple[int, ...]
    origin: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if not self.origin:
            object.__setattr__(self, "origin", tuple(range(self.n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def __len__(self) -> int:
        return self.n


class K1rWitness(NamedTuple):
    """An induced star: ``center`` adjacent to each of the pairwise
    non-adjacent ``leaves``."""

    center: int
    leaves: tuple[int, ...]

    def is_valid(self, G: Graph) -> bool:
        if self.center in self.leaves or len(set(self.leaves)) != len(self.leaves):
            return False
        if not all(G.has_edge(self.center, x) for x in self.leaves):
            return False
        return all(not G.has_edge(a, b) for a, b in combinations(self.leaves, 2))


popcount = int.bit_count


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(G: Graph, vertices: Iterable[int]) -> int:
    """Validate a vertex collection against ``G`` and pack it into a bitmask."""
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise GraphError(f"vertex {v!r} is not in a graph with {G.n} vertices")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


# -- named graphs -----------------------------------------------------------

def complete_graph(m: int) -> Graph:
    return Graph.from_edges(m, combinations(range(m), 2))


def empty_graph(m: int) -> Graph:
    return Graph(m, (0,) * m)


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(r: int) -> Graph:
    """K_{1,r} with centre 0."""
    return Graph.from_edges(r + 1, ((0, i) for i in range(1, r + 1)))


_NAMED = {
    "complete": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "empty": empty_graph,
}


def make_named_graph(kind: str, size: int) -> Graph:
    """Build one of the standard families ``complete``, ``path``, ``cycle``,
    ``star`` or ``empty`` of the given size parameter (``size >= 1``)."""
    try:
        build = _NAMED[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    if size < 1:
        raise GraphError(f"size parameter must be >= 1, got {size}")
    return build(size)


# -- structural primitives --------------------------------------------------

def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(popcount(nb) for nb in G.adj)


def induced_subgraph(G: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on ``keep`` (sorted), reindexed from 0, with
    ``origin`` recording the caller's labels."""
    verts = sorted(from_mask(to_mask(G, keep)))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        nb = 0
        for u in iter_bits(G.adj[v]):
            if u in index:
                nb |= 1 << index[u]
        adj.append(nb)
    return Graph(len(verts), tuple(adj), tuple(G.origin[v] for v in verts))


def delete_vertices(G: Graph, X: Iterable[int]) -> Graph:
    """G - X.  The result's ``origin`` maps new indices to labels of ``G``."""
    removed = to_mask(G, X)
    return induced_subgraph(G, iter_bits(G.full_mask & ~removed))


def component_masks(adj: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, as bitmasks
    ordered by smallest member."""
    comps = []
    while mask:
        seed = mask & -mask
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        mask &= ~comp
    return comps


def components(G: Graph) -> list[frozenset[int]]:
    return [from_mask(c) for c in component_masks(G.adj, G.full_mask)]


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(component_masks(G.adj, G.full_mask)) == 1


def isolated_mask(adj: tuple[int, ...], remaining: int) -> int:
    """Vertices of ``remaining`` with no neighbour inside ``remaining``."""
    iso = 0
    rest = remaining
    while rest:
        low = rest & -rest
        rest ^= low
        if not adj[low.bit_length() - 1] & remaining:
            iso |= low
    return iso


def isolated_count(G: Graph, X: Iterable[int] = ()) -> int:
    """i(G - X): number of isolated vertices left after deleting ``X``."""
    removed = to_mask(G, X)
    return popcount(isolated_mask(G.adj, G.full_mask & ~removed))


def neighborhood_mask(adj: tuple[int, ...], mask: int) -> int:
    nb = 0
    for v in iter_bits(mask):
        nb |= adj[v]
    return nb


def neighborhood_of_set(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """N_G(S), the union of the neighbourhoods; may intersect ``S``."""
    return from_mask(neighborhood_mask(G.adj, to_mask(G, S)))


def independent_mask(adj: tuple[int, ...], mask: int) -> bool:
    for v in iter_bits(mask):
        if adj[v] & mask:
            return False
    return True


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    return independent_mask(G.adj, to_mask(G, S))


def find_induced_star(G: Graph, r: int) -> K1rWitness | None:
    """Return the first induced K_{1,r} found, scanning centres in order and
    backtracking for an independent r-set inside each neighbourhood."""
    if r < 2:
        raise GraphError(f"r must be >= 2, got {r}")
    adj = G.adj

    def extend(chosen: list[int], candidates: int) -> list[int] | None:
        if len(chosen) == r:
            return chosen
        if popcount(candidates) < r - len(chosen):
            return None
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            v = low.bit_length() - 1
            found = extend(chosen + [v], candidates & ~adj[v])
            if found is not None:
                return found
        return None

    for center in range(G.n):
        if popcount(adj[center]) < r:
            continue
        leaves = extend([], adj[center])
        if leaves is not None:
            return K1rWitness(center, tuple(leaves))
    return None


def is_k1r_free(G: Graph, r: int) -> bool:
    """True iff ``G`` has no induced K_{1,r}."""
    return find_induced_star(G, r) is None


# -- composition ------------------------------------------------------------

def disjoint_union(parts: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for part in parts:
        adj.extend(nb << offset for nb in part.adj)
        offset += part.n
    return Graph(offset, tuple(adj))


def join(G1: Graph, G2: Graph) -> Graph:
    """G1 ∨ G2; the vertices of ``G1`` keep the low indices."""
    low = G1.full_mask
    high = G2.full_mask << G1.n
    adj = [nb | high for nb in G1.adj] + [(nb << G1.n) | low for nb in G2.adj]
    return Graph(G1.n + G2.n, tuple(adj))


def copies(G: Graph, k: int) -> Graph:
    """kG, the disjoint union of ``k`` copies of ``G``."""
    return disjoint_union([G] * k)


def relabel(G: Graph, order: Iterable[int]) -> Graph:
    """The graph whose vertex ``i`` is vertex ``order[i]`` of ``G``."""
    order = list(order)
    if sorted(order) != list(range(G.n)):
        raise GraphError("relabelling must be a permutation of the vertices")
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = []
    for v in order:
        nb = 0
        for u in iter_bits(G.adj[v]):
            nb |= 1 << pos[u]
        adj.append(nb)
    return Graph(G.n, tuple(adj))
