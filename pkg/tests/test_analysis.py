import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k1rfactors.analysis import (
    DisconnectedGraphError,
    ViolationWitness,
    epsilon1,
    epsilon2,
    epsilon3,
    has_p2_factor,
    has_p3_factor,
    has_sn_factor,
    has_sn_factor_independent_form,
    is_p2_covered,
    is_p2p3_covered,
    is_p3_covered,
    is_sun,
    revalidate,
    sun_count,
)
from k1rfactors.constructions import big_sun, odd_cycle
from k1rfactors.graph import (
    Graph,
    GraphError,
    complete_graph,
    copies,
    cycle_graph,
    empty_graph,
    is_connected,
    join,
    path_graph,
    star_graph,
)
import oracles
from strategies import connected_graphs, graphs, k1_join_k2, net_graph


def k2s_join_core(r, core):
    """(r-1)K2 ∨ K_core."""
    return join(copies(complete_graph(2), r - 1), complete_graph(core))


# -- suns --------------------------------------------------------------------

def test_is_sun_examples():
    assert is_sun(complete_graph(2)).kind == "K2"
    assert is_sun(empty_graph(1)).kind == "K1"
    d = is_sun(net_graph())
    assert d.kind == "BigSun" and d.base == {0, 1, 2}
    assert d.pendants == ((0, 3), (1, 4), (2, 5))
    assert not oracles.is_sun_bruteforce(cycle_graph(4))
    assert is_sun(cycle_graph(4)) is None


def test_is_sun_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        is_sun(copies(complete_graph(2), 2))


def test_sun_needs_factor_critical_base():
    # P4 with a pendant on every vertex: right shape, but P4 is not factor-critical
    G = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3)] + [(i, 4 + i) for i in range(4)])
    assert is_sun(G) is None
    assert not oracles.is_sun_bruteforce(G)


@pytest.mark.parametrize("k", [3, 5, 7])
def test_big_sun_recognised(k):
    d = is_sun(big_sun(odd_cycle(k)))
    assert d.kind == "BigSun" and d.base == frozenset(range(k))
    assert sorted(u for _, u in d.pendants) == list(range(k, 2 * k))


def test_sun_count_examples():
    assert sun_count(copies(complete_graph(2), 2)) == 2
    assert sun_count(cycle_graph(6)) == 0
    assert sun_count(net_graph()) == 1


@settings(max_examples=200)
@given(connected_graphs(max_n=8))
def test_is_sun_matches_bruteforce(G):
    assert (is_sun(G) is not None) == oracles.is_sun_bruteforce(G)


@given(connected_graphs(min_n=3, max_n=8))
def test_big_sun_pendants_are_degree_one(G):
    d = is_sun(G)
    if d is not None and d.kind == "BigSun":
        pendants = {u for _, u in d.pendants}
        assert pendants == {v for v in range(G.n) if G.degree(v) == 1}
        assert len(d.base) % 2 == 1 and len(d.base) >= 3


# -- epsilon -----------------------------------------------------------------

def test_epsilon_examples():
    assert epsilon1(complete_graph(4), {0, 1}) == 2
    # P4 = x1x2x3x4 with S = {x2}: independent, {x3, x4} is a nontrivial component
    assert epsilon1(path_graph(4), {1}) == 1
    assert epsilon1(path_graph(4), set()) == 0
    assert epsilon2(k2s_join_core(4, 2), {6, 7}) == 2
    # 2K2 ∨ K1: both components of G - S are K2 suns
    assert epsilon2(k2s_join_core(3, 1), {4}) == 0
    assert epsilon2(cycle_graph(5), set()) == 0
    assert epsilon3(k1_join_k2(3), {2, 3}) == 3
    assert epsilon3(star_graph(3), set()) == 0
    assert epsilon3(star_graph(3), {1, 2}) == 0


@given(graphs(max_n=7), st.data())
def test_epsilon_ranges(G, data):
    S = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)))) if G.n else set()
    assert epsilon1(G, S) in {0, 1, 2}
    assert epsilon2(G, S) in {0, 1, 2}
    assert epsilon3(G, S) in {0, 3}
    assert epsilon1(G) == epsilon2(G) == epsilon3(G) == 0


# -- existence deciders --------------------------------------------------------

def test_sn_factor_examples():
    d = has_sn_factor(star_graph(4), 2)
    assert not d and d.witness.vertices == {0}
    assert (d.witness.deficiency, d.witness.bound) == (4, 2)
    assert has_sn_factor(star_graph(4), 4)
    assert oracles.has_factor(cycle_graph(6), "star", 2)
    assert has_sn_factor(cycle_graph(6), 2)


def test_sn_factor_errors():
    with pytest.raises(GraphError):
        has_sn_factor(complete_graph(2), 1)
    with pytest.raises(GraphError):
        has_sn_factor(empty_graph(25), 2)
    with pytest.raises(GraphError):
        has_sn_factor_independent_form(empty_graph(25), 2)


def test_independent_form_examples():
    G = star_graph(4)
    # all four leaves: N(S) = {centre}, 4 > 2 * 1
    assert revalidate(G, ViolationWitness("independent", frozenset({1, 2, 3, 4}), 4, 2, multiplier=2))
    # three leaves already violate (3 > 2), and that set is found first
    d = has_sn_factor_independent_form(G, 2)
    assert not d and d.witness.vertices == {1, 2, 3}
    assert has_sn_factor_independent_form(complete_graph(3), 2)
    d = has_sn_factor_independent_form(empty_graph(1), 2)
    assert not d and d.witness.vertices == {0} and (d.witness.deficiency, d.witness.bound) == (1, 0)


def test_p2_factor_examples(p4, c5):
    assert has_p2_factor(p4)
    d = has_p2_factor(star_graph(3))
    assert not d and d.witness.vertices == {0}
    assert oracles.has_factor(c5, "path", 2)
    assert has_p2_factor(c5)


def test_p3_factor_examples(net, two_k2):
    assert not oracles.has_factor(net, "path", 3)
    d = has_p3_factor(net)
    assert not d and d.witness.vertices == frozenset() and d.witness.deficiency == 1
    assert has_p3_factor(complete_graph(3))
    d = has_p3_factor(two_k2)
    assert not d and d.witness.vertices == frozenset() and (d.witness.deficiency, d.witness.bound) == (2, 0)


# -- covered deciders ----------------------------------------------------------

def test_p2_covered_examples(p4):
    assert is_p2_covered(p4)
    d = is_p2_covered(star_graph(3))
    assert not d
    assert d.witness.vertices == {0} and d.witness.epsilon == 0
    assert (d.witness.deficiency, d.witness.bound) == (3, 2)
    # 3K1 ∨ K2, S = V(K2): i = 3 > 4 - 2
    G = k1_join_k2(4)
    assert revalidate(G, ViolationWitness("p2-covered", frozenset({3, 4}), 3, 2, 2))
    assert not is_p2_covered(G)


def test_p3_covered_examples():
    G = k2s_join_core(4, 2)
    assert revalidate(G, ViolationWitness("p3-covered", frozenset({6, 7}), 3, 2, 2))
    assert not is_p3_covered(G)
    for H in (cycle_graph(6), complete_graph(4)):
        assert oracles.is_covered(H, "path", 3)
        assert is_p3_covered(H)


def test_p2p3_covered_examples(p4):
    assert not oracles.has_factor(p4, "star", 2, edge=(1, 2))
    assert not is_p2p3_covered(p4)
    G = k1_join_k2(3)
    assert revalidate(G, ViolationWitness("p2p3-covered", frozenset({2, 3}), 2, 1, 3))
    assert not is_p2p3_covered(G)
    assert oracles.is_covered(complete_graph(3), "star", 2)
    assert is_p2p3_covered(complete_graph(3))


@pytest.mark.parametrize("decider", [is_p2_covered, is_p3_covered, is_p2p3_covered])
def test_covered_rejects_disconnected(decider, two_k2):
    with pytest.raises(DisconnectedGraphError):
        decider(two_k2)


# -- properties ----------------------------------------------------------------

@given(graphs(max_n=7), st.sampled_from([2, 3]))
def test_subset_and_independent_forms_agree(G, n):
    assert has_sn_factor(G, n).verdict == has_sn_factor_independent_form(G, n).verdict


@given(graphs(max_n=7))
def test_p2_is_s2(G):
    assert has_p2_factor(G).verdict == has_sn_factor(G, 2).verdict


@given(graphs(max_n=7), st.integers(2, 4))
def test_monotone_in_n(G, n):
    if has_sn_factor(G, n):
        assert has_sn_factor(G, n + 1)


@given(connected_graphs(min_n=2, max_n=7))
def test_covered_implies_exists(G):
    if is_p2_covered(G):
        assert has_p2_factor(G)
    if is_p3_covered(G):
        assert has_p3_factor(G)
    if is_p2p3_covered(G):
        assert has_sn_factor(G, 2)


@given(graphs(max_n=7))
def test_witnesses_revalidate(G):
    decisions = [has_sn_factor(G, 2), has_sn_factor(G, 3), has_p3_factor(G),
                 has_sn_factor_independent_form(G, 2)]
    if is_connected(G):
        decisions += [is_p2_covered(G), is_p3_covered(G), is_p2p3_covered(G)]
    for d in decisions:
        assert d.verdict == (d.witness is None)
        if d.witness is not None:
            assert revalidate(G, d.witness)


def test_revalidate_rejects_tampering():
    G = star_graph(4)
    w = has_sn_factor(G, 2).witness
    assert revalidate(G, w)
    from dataclasses import replace
    assert not revalidate(G, replace(w, deficiency=5))
    assert not revalidate(G, replace(w, vertices=frozenset({1})))
    assert not revalidate(G, replace(w, vertices=frozenset({9})))


@given(graphs(max_n=6))
def test_witness_is_first_violation(G):
    """The witness is the lexicographically least violating set of least size."""
    from itertools import combinations
    d = has_p3_factor(G)
    if d.verdict:
        return
    for k in range(G.n + 1):
        for X in combinations(range(G.n), k):
            if sun_count(G, X) > 2 * k:
                assert frozenset(X) == d.witness.vertices
                return
