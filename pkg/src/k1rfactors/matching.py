"""Maximum-cardinality matching in general graphs (Edmonds' blossom method),
perfect matchings and factor-criticality."""

from __future__ import annotations

from collections import deque

from .graph import Graph, induced_subgraph, iter_bits

Matching = frozenset  # of (u, v) pairs with u < v


def _augment_from(root: int, nbrs: list[list[int]], mate: list[int]) -> bool:
    """Grow an alternating tree from the exposed ``root``, shrinking odd
    cycles into their base vertex; flip the path if an exposed vertex is hit."""
    n = len(nbrs)
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_blossom(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for w in nbrs[v]:
            if base[v] == base[w] or mate[v] == w:
                continue
            if w == root or (mate[w] != -1 and parent[mate[w]] != -1):
                b = lowest_common_base(v, w)
                in_blossom = [False] * n
                mark_blossom(v, b, w, in_blossom)
                mark_blossom(w, b, v, in_blossom)
                for x in range(n):
                    if in_blossom[base[x]]:
                        base[x] = b
                        if not in_tree[x]:
                            in_tree[x] = True
                            queue.append(x)
            elif parent[w] == -1:
                parent[w] = v
                if mate[w] == -1:
                    while w != -1:
                        pv = parent[w]
                        nxt = mate[pv]
                        mate[w] = pv
                        mate[pv] = w
                        w = nxt
                    return True
                in_tree[mate[w]] = True
                queue.append(mate[w])
    return False


def _mates(G: Graph) -> list[int]:
    nbrs = [list(iter_bits(nb)) for nb in G.adj]
    mate = [-1] * G.n
    # greedy start; the blossom search only has to fix what greedy missed
    for v in range(G.n):
        if mate[v] == -1:
            for w in nbrs[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break
    for v in range(G.n):
        if mate[v] == -1:
            _augment_from(v, nbrs, mate)
    return mate


def matching_number(G: Graph) -> int:
    """Size of a maximum matching."""
    return sum(1 for v, w in enumerate(_mates(G)) if w > v)


def max_matching(G: Graph) -> Matching:
    """A maximum matching; among all maximum matchings the one whose sorted
    edge list is lexicographically smallest."""
    target = matching_number(G)
    chosen: list[tuple[int, int]] = []
    used = 0
    for u, v in G.edges():
        if len(chosen) == target:
            break
        if used >> u & 1 or used >> v & 1:
            continue
        trial = used | 1 << u | 1 << v
        rest = induced_subgraph(G, iter_bits(G.full_mask & ~trial))
        if matching_number(rest) == target - len(chosen) - 1:
            chosen.append((u, v))
            used = trial
    return frozenset(chosen)


def is_matching(G: Graph, edges) -> bool:
    covered: set[int] = set()
    for u, v in edges:
        if not G.has_edge(u, v) or u in covered or v in covered:
            return False
        covered.update((u, v))
    return True


def has_perfect_matching(G: Graph) -> bool:
    if G.n % 2:
        return False
    return 2 * matching_number(G) == G.n


def is_factor_critical(G: Graph) -> bool:
    """True iff G - v has a perfect matching for every vertex v."""
    if G.n % 2 == 0:
        return False
    for v in range(G.n):
        if not has_perfect_matching(induced_subgraph(G, iter_bits(G.full_mask & ~(1 << v)))):
            return False
    return True
