import pytest

from k1rfactors.analysis import DECIDERS, is_sun, revalidate
from k1rfactors.canon import canonical_form
from k1rfactors.constructions import (
    THEOREMS,
    big_sun,
    check_case,
    degree_bound,
    odd_cycle,
    sharpness_graph,
)
from k1rfactors.graph import GraphError, complete_graph, empty_graph, is_k1r_free, min_degree, path_graph, star_graph
from k1rfactors.matching import is_factor_critical
from strategies import net_graph

DECIDER_OF = {
    "T1-1": "sn-factor",
    "T1-2": "p3-factor",
    "T2-1": "p2-covered",
    "T2-2": "p3-covered",
    "T2-3": "p2p3-covered",
}

CASES = [(t, r, n) for t in THEOREMS for r in range(3, 9)
         for n in ((2, 3) if t == "T1-1" else (None,))]


def test_t11_example():
    case = sharpness_graph("T1-1", 5, 2)
    assert canonical_form(case.graph) == canonical_form(star_graph(4))
    assert case.expected_delta == 1 and case.core == {4}
    assert (case.deficiency, case.bound) == (4, 2) and case.violating


def test_t23_example():
    case = sharpness_graph("T2-3", 3)
    assert case.graph.n == 4 and min_degree(case.graph) == 2
    assert case.core == {2, 3} and case.epsilon == 3
    assert (case.deficiency, case.bound) == (2, 1)


def test_t21_small_r_is_flagged():
    case = sharpness_graph("T2-1", 3)
    assert canonical_form(case.graph) == canonical_form(path_graph(3))
    assert case.expected_delta == 1
    assert not case.violating and case.expected_witness is None
    assert (case.deficiency, case.bound, case.epsilon) == (2, 2, 0)
    assert not sharpness_graph("T2-2", 3).violating


@pytest.mark.parametrize("theorem_id, r, n", CASES)
def test_sharpness_properties(theorem_id, r, n):
    case = sharpness_graph(theorem_id, r, n)
    G = case.graph
    assert min_degree(G) == case.expected_delta == degree_bound(theorem_id, r, n) - 1
    assert is_k1r_free(G, r) and check_case(case)
    assert case.core == frozenset(range(G.n - len(case.core), G.n))
    if r == 3 and theorem_id in ("T2-1", "T2-2"):
        assert not case.violating
        return
    assert case.violating
    assert case.deficiency == r - 1 > case.bound
    assert revalidate(G, case.expected_witness)
    decide = DECIDERS[DECIDER_OF[theorem_id]]
    assert not (decide(G, n) if n else decide(G))


def test_sharpness_errors():
    with pytest.raises(GraphError):
        sharpness_graph("T1-1", 5)
    with pytest.raises(GraphError):
        sharpness_graph("T2-1", 5, 2)
    with pytest.raises(GraphError):
        sharpness_graph("T2-1", 2)
    with pytest.raises(GraphError):
        sharpness_graph("T9", 4)


def test_big_sun_examples():
    K2 = big_sun(empty_graph(1))
    assert K2 == complete_graph(2) and is_sun(K2).kind == "K2"
    net = big_sun(complete_graph(3))
    assert net == net_graph() and net.edge_count == 6
    sun10 = big_sun(odd_cycle(5))
    assert sun10.n == 10 and is_sun(sun10).kind == "BigSun"
    with pytest.raises(GraphError):
        big_sun(path_graph(3))


@pytest.mark.parametrize("k", [3, 5, 7, 9])
def test_big_sun_invariant(k):
    H = odd_cycle(k)
    d = is_sun(big_sun(H))
    assert d.kind == "BigSun" and d.base == frozenset(range(k))


def test_odd_cycle():
    assert odd_cycle(3) == complete_graph(3)
    assert is_factor_critical(odd_cycle(5))
    for bad in (4, 1, 2):
        with pytest.raises(GraphError):
            odd_cycle(bad)
