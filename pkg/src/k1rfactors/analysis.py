"""Sun recognition and the Tutte-type characterizations of star factors,
path factors and factor-covered graphs.

Every decider scans vertex subsets by increasing size, lexicographically
within a size, and stops at the first violation.  A negative answer carries
that subset as a :class:`ViolationWitness`, which :func:`revalidate` can
check from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Callable, Iterator

from .graph import (
    Graph,
    GraphError,
    component_masks,
    from_mask,
    independent_mask,
    induced_subgraph,
    is_connected,
    isolated_mask,
    iter_bits,
    neighborhood_mask,
    popcount,
    to_mask,
)
from .matching import is_factor_critical

if TYPE_CHECKING:
    from .search import Factor

DEFAULT_CAP = 24


class DisconnectedGraphError(GraphError):
    """A covered-graph criterion was asked about a disconnected graph."""


@dataclass(frozen=True)
class SunDecomposition:
    kind: str  # "K1", "K2" or "BigSun"
    base: frozenset[int]
    pendants: tuple[tuple[int, int], ...]  # (base vertex, its pendant)


@dataclass(frozen=True)
class ViolationWitness:
    """A vertex set on which a characterization's inequality fails.

    ``condition`` names the inequality:

    ``isolated``      i(G-X) <= multiplier * |X|
    ``independent``   |S| <= multiplier * |N(S)| for independent S
    ``sun``           sun(G-X) <= 2|X|
    ``p2-covered``    i(G-S) <= 2|S| - eps1(S)
    ``p3-covered``    sun(G-S) <= 2|S| - eps2(S)
    ``p2p3-covered``  i(G-S) <= 2|S| - eps3(S)
    """

    condition: str
    vertices: frozenset[int]
    deficiency: int
    bound: int
    epsilon: int | None = None
    multiplier: int | None = None

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "vertices": sorted(self.vertices),
            "deficiency": self.deficiency,
            "bound": self.bound,
            "epsilon": self.epsilon,
            "multiplier": self.multiplier,
        }


@dataclass(frozen=True)
class Decision:
    verdict: bool
    witness: ViolationWitness | None = None
    factor: Factor | None = None

    def __post_init__(self) -> None:
        if self.verdict == (self.witness is not None):
            raise ValueError("a Decision carries a witness exactly when it is negative")

    def __bool__(self) -> bool:
        return self.verdict


# -- suns -------------------------------------------------------------------

def _sun_split(adj: tuple[int, ...], comp: int) -> tuple[int, list[tuple[int, int]]] | None:
    """For a connected vertex set of even size >= 4: the base mask and
    (base, pendant) pairs if it induces a big sun, else None."""
    size = popcount(comp)
    if size % 2:
        return None
    pendants = [v for v in iter_bits(comp) if popcount(adj[v] & comp) == 1]
    if len(pendants) != size // 2:
        return None
    pendant_mask = 0
    for u in pendants:
        pendant_mask |= 1 << u
    base = comp & ~pendant_mask
    pairs = []
    hit = 0
    for u in pendants:
        v_bit = adj[u] & comp
        if not v_bit & base or v_bit & hit:
            return None
        hit |= v_bit
        pairs.append((v_bit.bit_length() - 1, u))
    return base, sorted(pairs)


class _SunCache:
    """Memoised sun test on vertex subsets of one graph."""

    def __init__(self, G: Graph) -> None:
        self.G = G
        self.memo: dict[int, bool] = {}

    def __call__(self, comp: int) -> bool:
        hit = self.memo.get(comp)
        if hit is not None:
            return hit
        size = popcount(comp)
        if size <= 2:
            result = True  # comp is connected, so size 2 means an edge
        else:
            split = _sun_split(self.G.adj, comp)
            result = split is not None and is_factor_critical(
                induced_subgraph(self.G, iter_bits(split[0])))
        self.memo[comp] = result
        return result


def is_sun(G: Graph) -> SunDecomposition | None:
    """Recognise K1, K2 or a big sun (factor-critical core plus one pendant
    per core vertex).  ``G`` must be connected."""
    if not is_connected(G):
        raise DisconnectedGraphError("sun recognition needs a connected graph")
    if G.n == 1:
        return SunDecomposition("K1", frozenset(), ())
    if G.n == 2:
        return SunDecomposition("K2", frozenset(), ())
    split = _sun_split(G.adj, G.full_mask)
    if split is None:
        return None
    base, pairs = split
    if not is_factor_critical(induced_subgraph(G, iter_bits(base))):
        return None
    return SunDecomposition("BigSun", from_mask(base), tuple(pairs))


def _sun_count(adj: tuple[int, ...], remaining: int, sun: _SunCache) -> int:
    return sum(1 for comp in component_masks(adj, remaining) if sun(comp))


def sun_count(G: Graph, X=()) -> int:
    """sun(G - X): components of G - X that are suns (K1 and K2 included)."""
    removed = to_mask(G, X)
    return _sun_count(G.adj, G.full_mask & ~removed, _SunCache(G))


# -- epsilon terms ----------------------------------------------------------

def _eps1(adj: tuple[int, ...], full: int, S: int) -> int:
    if not S:
        return 0
    if not independent_mask(adj, S):
        return 2
    rest = full & ~S
    return 1 if isolated_mask(adj, rest) != rest else 0


def _eps2(adj: tuple[int, ...], full: int, S: int, sun: _SunCache) -> int:
    if not S:
        return 0
    if not independent_mask(adj, S):
        return 2
    return 1 if any(not sun(c) for c in component_masks(adj, full & ~S)) else 0


def _eps3(adj: tuple[int, ...], S: int) -> int:
    return 3 if S and not independent_mask(adj, S) else 0


def epsilon1(G: Graph, S=()) -> int:
    """2 if S is non-empty and not independent; 1 if S is non-empty,
    independent and G - S has a component with >= 2 vertices; else 0."""
    return _eps1(G.adj, G.full_mask, to_mask(G, S))


def epsilon2(G: Graph, S=()) -> int:
    """As :func:`epsilon1` but the 1-case asks for a non-sun component."""
    return _eps2(G.adj, G.full_mask, to_mask(G, S), _SunCache(G))


def epsilon3(G: Graph, S=()) -> int:
    return _eps3(G.adj, to_mask(G, S))


# -- witnesses --------------------------------------------------------------

_Evaluator = Callable[[int], "tuple[int, int, int | None]"]


def _evaluator(G: Graph, condition: str, multiplier: int | None = None) -> _Evaluator:
    """Return ``S_mask -> (deficiency, bound, epsilon)`` for a condition."""
    adj, full = G.adj, G.full_mask
    sun = _SunCache(G)
    if condition == "isolated":
        return lambda S: (popcount(isolated_mask(adj, full & ~S)), multiplier * popcount(S), None)
    if condition == "independent":
        return lambda S: (popcount(S), multiplier * popcount(neighborhood_mask(adj, S)), None)
    if condition == "sun":
        return lambda S: (_sun_count(adj, full & ~S, sun), 2 * popcount(S), None)
    if condition == "p2-covered":
        def ev(S: int):
            e = _eps1(adj, full, S)
            return popcount(isolated_mask(adj, full & ~S)), 2 * popcount(S) - e, e
        return ev
    if condition == "p3-covered":
        def ev(S: int):
            e = _eps2(adj, full, S, sun)
            return _sun_count(adj, full & ~S, sun), 2 * popcount(S) - e, e
        return ev
    if condition == "p2p3-covered":
        def ev(S: int):
            e = _eps3(adj, S)
            return popcount(isolated_mask(adj, full & ~S)), 2 * popcount(S) - e, e
        return ev
    raise ValueError(f"unknown condition {condition!r}")


def evaluate(G: Graph, condition: str, vertices, multiplier: int | None = None) -> tuple[int, int, int | None]:
    """(deficiency, bound, epsilon) of ``condition`` at the given vertex set."""
    return _evaluator(G, condition, multiplier)(to_mask(G, vertices))


def revalidate(G: Graph, w: ViolationWitness) -> bool:
    """Recompute a witness from its vertex set; True iff it still violates
    and reproduces the stored numbers."""
    try:
        S = to_mask(G, w.vertices)
    except GraphError:
        return False
    if w.condition == "independent" and not independent_mask(G.adj, S):
        return False
    if w.condition in ("isolated", "independent") and w.multiplier is None:
        return False
    deficiency, bound, eps = _evaluator(G, w.condition, w.multiplier)(S)
    return (deficiency, bound, eps) == (w.deficiency, w.bound, w.epsilon) and deficiency > bound


# -- deciders ---------------------------------------------------------------

def _subsets(n: int) -> Iterator[int]:
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield mask


def _independent_subsets(adj: tuple[int, ...], n: int) -> Iterator[int]:
    """Independent sets by increasing size, lexicographic within a size."""
    level = [(0, -1)]  # (mask, largest member)
    while level:
        for mask, _ in level:
            yield mask
        nxt = []
        for mask, top in level:
            blocked = neighborhood_mask(adj, mask)
            for v in range(top + 1, n):
                if not blocked >> v & 1:
                    nxt.append((mask | 1 << v, v))
        # extending a lexicographic level in order keeps it lexicographic
        level = nxt


def _check_cap(G: Graph, cap: int) -> None:
    if G.n > cap:
        raise GraphError(f"subset enumeration capped at {cap} vertices, got {G.n}")


def _scan(G: Graph, condition: str, subsets: Iterator[int], multiplier: int | None = None) -> Decision:
    ev = _evaluator(G, condition, multiplier)
    for S in subsets:
        deficiency, bound, eps = ev(S)
        if deficiency > bound:
            return Decision(False, ViolationWitness(condition, from_mask(S), deficiency, bound, eps, multiplier))
    return Decision(True)


def _require_star_param(n: int) -> None:
    if n < 2:
        raise GraphError(f"star family parameter must be >= 2, got {n}")


def has_sn_factor(G: Graph, n: int, *, cap: int = DEFAULT_CAP) -> Decision:
    """S_n-factor exists iff i(G - X) <= n|X| for every X."""
    _require_star_param(n)
    _check_cap(G, cap)
    return _scan(G, "isolated", _subsets(G.n), n)


def has_sn_factor_independent_form(G: Graph, n: int, *, cap: int = DEFAULT_CAP) -> Decision:
    """S_n-factor exists iff |S| <= n|N(S)| for every independent S."""
    _require_star_param(n)
    _check_cap(G, cap)
    return _scan(G, "independent", _independent_subsets(G.adj, G.n), n)


def has_p2_factor(G: Graph, *, cap: int = DEFAULT_CAP) -> Decision:
    """P>=2-factor exists iff i(G - X) <= 2|X| for every X."""
    return has_sn_factor(G, 2, cap=cap)


def has_p3_factor(G: Graph, *, cap: int = DEFAULT_CAP) -> Decision:
    """P>=3-factor exists iff sun(G - X) <= 2|X| for every X."""
    _check_cap(G, cap)
    return _scan(G, "sun", _subsets(G.n))


def _require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise DisconnectedGraphError("covered-graph criteria are stated for connected graphs")


def is_p2_covered(G: Graph, *, cap: int = DEFAULT_CAP) -> Decision:
    _require_connected(G)
    _check_cap(G, cap)
    return _scan(G, "p2-covered", _subsets(G.n))


def is_p3_covered(G: Graph, *, cap: int = DEFAULT_CAP) -> Decision:
    _require_connected(G)
    _check_cap(G, cap)
    return _scan(G, "p3-covered", _subsets(G.n))


def is_p2p3_covered(G: Graph, *, cap: int = DEFAULT_CAP) -> Decision:
    _require_connected(G)
    _check_cap(G, cap)
    return _scan(G, "p2p3-covered", _subsets(G.n))


DECIDERS = {
    "sn-factor": has_sn_factor,
    "p2-factor": has_p2_factor,
    "p3-factor": has_p3_factor,
    "p2-covered": is_p2_covered,
    "p3-covered": is_p3_covered,
    "p2p3-covered": is_p2p3_covered,
}
