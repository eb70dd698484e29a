"""Extremal graphs showing the minimum-degree bounds cannot be lowered, and
sun builders.

Each extremal graph is a join ``A ∨ K_c`` where ``A`` is ``(r-1)K_1`` or
``(r-1)K_2``.  The clique occupies the last ``c`` indices, and that block is
the deleted set on which the relevant characterization is expected to fail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import ViolationWitness, evaluate
from .graph import (
    Graph,
    GraphError,
    complete_graph,
    copies,
    cycle_graph,
    empty_graph,
    is_k1r_free,
    join,
    min_degree,
)
from .matching import is_factor_critical

THEOREMS = ("T1-1", "T1-2", "T2-1", "T2-2", "T2-3")


def degree_bound(theorem_id: str, r: int, n: int | None = None) -> int:
    """Minimum degree that forces the theorem's conclusion in K_{1,r}-free graphs."""
    if theorem_id == "T1-1":
        if n is None:
            raise GraphError("T1-1 needs the star parameter n")
        return (r + n - 2) // n
    if theorem_id == "C1-1":
        return r // 2
    if theorem_id in ("T1-2", "T2-1"):
        return r // 2 + 1
    if theorem_id == "T2-2":
        return r // 2 + 2
    if theorem_id == "T2-3":
        return -(-r // 2) + 1
    raise GraphError(f"unknown theorem id {theorem_id!r}")


# (outer part uses K2 copies?, characterization condition)
_LAYOUT = {
    "T1-1": (False, "isolated"),
    "T1-2": (True, "sun"),
    "T2-1": (False, "p2-covered"),
    "T2-2": (True, "p3-covered"),
    "T2-3": (False, "p2p3-covered"),
}


@dataclass(frozen=True)
class SharpnessCase:
    """An extremal graph with the evaluation of its designated deleted set.

    ``violating`` is False when the inequality the construction aims at
    actually holds for this ``r`` (then ``expected_witness`` is None).
    """

    theorem_id: str
    r: int
    n: int | None
    graph: Graph
    expected_delta: int
    core: frozenset[int]
    deficiency: int
    bound: int
    epsilon: int | None
    violating: bool
    expected_witness: ViolationWitness | None


def sharpness_graph(theorem_id: str, r: int, n: int | None = None) -> SharpnessCase:
    if theorem_id not in _LAYOUT:
        raise GraphError(f"unknown theorem id {theorem_id!r}")
    if r < 3:
        raise GraphError(f"r must be >= 3, got {r}")
    if (theorem_id == "T1-1") != (n is not None):
        raise GraphError("the star parameter n is required for T1-1 and only for T1-1")
    if n is not None and n < 2:
        raise GraphError(f"n must be >= 2, got {n}")

    bound = degree_bound(theorem_id, r, n)
    use_edges, condition = _LAYOUT[theorem_id]
    clique = {
        "T1-1": bound - 1,
        "T1-2": r // 2 - 1,
        "T2-1": r // 2,
        "T2-2": r // 2,
        "T2-3": -(-r // 2),
    }[theorem_id]
    outer = copies(complete_graph(2) if use_edges else empty_graph(1), r - 1)
    G = join(outer, complete_graph(clique))
    core = frozenset(range(outer.n, G.n))

    multiplier = n if theorem_id == "T1-1" else None
    deficiency, side, eps = evaluate(G, condition, core, multiplier)
    violating = deficiency > side
    witness = ViolationWitness(condition, core, deficiency, side, eps, multiplier) if violating else None
    return SharpnessCase(
        theorem_id=theorem_id,
        r=r,
        n=n,
        graph=G,
        expected_delta=bound - 1,
        core=core,
        deficiency=deficiency,
        bound=side,
        epsilon=eps,
        violating=violating,
        expected_witness=witness,
    )


def check_case(case: SharpnessCase) -> bool:
    """The case's structural claims: degree one below the bound, K_{1,r}-free."""
    return min_degree(case.graph) == case.expected_delta and is_k1r_free(case.graph, case.r)


def big_sun(H: Graph) -> Graph:
    """Attach one pendant vertex to every vertex of the factor-critical ``H``.

    Vertex ``H.n + i`` is the pendant of vertex ``i``.
    """
    if not is_factor_critical(H):
        raise GraphError("a sun is built on a factor-critical graph")
    edges = H.edges() + [(i, H.n + i) for i in range(H.n)]
    return Graph.from_edges(2 * H.n, edges)


def odd_cycle(k: int) -> Graph:
    if k < 3 or k % 2 == 0:
        raise GraphError(f"odd cycle needs odd k >= 3, got {k}")
    return cycle_graph(k)
