"""Star factors, path factors and factor-covered graphs in K_{1,r}-free graphs:
deciders with certificates, brute-force oracles, extremal constructions and
exhaustive verification sweeps."""

__version__ = "0.1.0"

from .analysis import (  # noqa: E402
    Decision,
    DisconnectedGraphError,
    SunDecomposition,
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
from .canon import canonical_form  # noqa: E402
from .constructions import SharpnessCase, big_sun, odd_cycle, sharpness_graph  # noqa: E402
from .graph import (  # noqa: E402
    Graph,
    GraphError,
    K1rWitness,
    components,
    delete_vertices,
    disjoint_union,
    find_induced_star,
    is_independent,
    is_k1r_free,
    isolated_count,
    join,
    make_named_graph,
    min_degree,
    neighborhood_of_set,
)
from .io import ParseError, parse_edge_list, parse_graph6, write_graph6  # noqa: E402
from .matching import has_perfect_matching, is_factor_critical, max_matching  # noqa: E402
from .search import (  # noqa: E402
    Factor,
    FactorComponent,
    Family,
    find_factor_covering_edge,
    find_pgek_factor,
    find_sn_factor,
    is_covered_bruteforce,
    verify_factor,
)
