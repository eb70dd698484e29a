"""Hypothesis strategies and small named graphs shared by the tests."""

from hypothesis import strategies as st

from k1rfactors.graph import Graph, complete_graph, join


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges |= {p for p, b in zip(pairs, bits) if b}
    return Graph.from_edges(n, sorted(edges))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


def net_graph() -> Graph:
    """C3 with one pendant per triangle vertex."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def k1_join_k2(r: int) -> Graph:
    """(r-1)K1 ∨ K2."""
    return join(Graph(r - 1, (0,) * (r - 1)), complete_graph(2))
