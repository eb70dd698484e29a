"""Exhaustive verification sweeps and decider-versus-search cross-checks.

Work is fanned out over a process pool in fixed-size chunks and merged back
in input order, so a report does not depend on the number of workers.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Sequence, TypeVar, Union

from . import __version__
from .analysis import (
    Decision,
    ViolationWitness,
    has_p2_factor,
    has_p3_factor,
    has_sn_factor,
    has_sn_factor_independent_form,
    is_p2_covered,
    is_p2p3_covered,
    is_p3_covered,
    revalidate,
)
from .constructions import degree_bound
from .enumeration import SweepConfig, enumerate_graphs
from .graph import Graph, GraphError, is_connected, is_k1r_free, min_degree
from .io import write_graph6
from .search import Factor, Family, find_factor, is_covered_bruteforce, verify_factor

T = TypeVar("T")
R = TypeVar("R")

THEOREM_IDS = ("T1-1", "T1-2", "T2-1", "T2-2", "T2-3", "C1-1")
COVERED_THEOREMS = ("T2-1", "T2-2", "T2-3")


def parallel_map(func: Callable[[T], R], items: Iterable[T], jobs: int = 1, chunk_size: int = 256) -> Iterator[R]:
    """Order-preserving map; ``func`` must be picklable when ``jobs > 1``."""
    if jobs <= 1:
        yield from map(func, items)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(func, items, chunksize=chunk_size)


# -- theorem sweeps ---------------------------------------------------------

def _conclusion(theorem_id: str, n: int | None) -> Callable[[Graph], Decision]:
    if theorem_id == "T1-1":
        return partial(has_sn_factor, n=n)
    return {
        "C1-1": has_p2_factor,
        "T1-2": has_p3_factor,
        "T2-1": is_p2_covered,
        "T2-2": is_p3_covered,
        "T2-3": is_p2p3_covered,
    }[theorem_id]


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    r: int
    n: int | None
    weaken: int
    degree_bound: int
    config: dict
    graphs_enumerated: int
    hypothesis_matches: int
    counterexamples: tuple[tuple[str, ViolationWitness], ...]
    wall_time: float = field(default=0.0, compare=False)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def as_dict(self, include_timing: bool = False) -> dict:
        doc = {
            "tool": "k1rfactors",
            "version": __version__,
            "theorem_id": self.theorem_id,
            "r": self.r,
            "n": self.n,
            "weaken": self.weaken,
            "degree_bound": self.degree_bound,
            "config": self.config,
            "graphs_enumerated": self.graphs_enumerated,
            "hypothesis_matches": self.hypothesis_matches,
            "counterexamples": [{"graph6": g6, "witness": w.as_dict()} for g6, w in self.counterexamples],
        }
        if include_timing:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc

    def to_text(self, include_timing: bool = False) -> str:
        doc = self.as_dict(include_timing)
        lines = []
        for key, value in doc.items():
            if key == "counterexamples":
                lines.append(f"counterexample_count: {len(value)}")
                for item in value:
                    lines.append(f"counterexample: {item['graph6']} {json.dumps(item['witness'], sort_keys=True)}")
            elif isinstance(value, dict):
                lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


def _sweep_one(G: Graph, theorem_id: str, r: int, n: int | None, bound: int) -> tuple[bool, tuple[str, ViolationWitness] | None]:
    if G.n == 0 or min_degree(G) < bound or not is_k1r_free(G, r):
        return False, None
    decision = _conclusion(theorem_id, n)(G)
    if decision.verdict:
        return True, None
    if not revalidate(G, decision.witness):
        raise AssertionError(f"witness failed revalidation on {write_graph6(G)}")
    return True, (write_graph6(G), decision.witness)


def _check_theorem_params(theorem_id: str, r: int, n: int | None) -> None:
    if theorem_id not in THEOREM_IDS:
        raise GraphError(f"unknown theorem id {theorem_id!r}; expected one of {THEOREM_IDS}")
    if r < 3:
        raise GraphError(f"r must be >= 3, got {r}")
    if theorem_id == "T1-1":
        if n is None or n < 2:
            raise GraphError("T1-1 needs n >= 2")
    elif n is not None:
        raise GraphError(f"{theorem_id} takes no n parameter")


def verify_theorem(theorem_id: str, r: int, n: int | None, config: SweepConfig, weaken: int = 0) -> TheoremReport:
    """Run the theorem's conclusion on every enumerated graph meeting its
    hypothesis (K_{1,r}-free, minimum degree >= bound - weaken)."""
    _check_theorem_params(theorem_id, r, n)
    if weaken < 0:
        raise GraphError("weaken must be non-negative")
    if theorem_id in COVERED_THEOREMS and not config.connected_only:
        config = SweepConfig(config.max_vertices, config.min_vertices, config.dedup, True,
                             config.jobs, config.chunk_size)
    bound = degree_bound(theorem_id, r, n) - weaken
    start = time.perf_counter()
    worker = partial(_sweep_one, theorem_id=theorem_id, r=r, n=n, bound=bound)
    enumerated = matched = 0
    found = []
    for hit, cex in parallel_map(worker, enumerate_graphs(config), config.jobs, config.chunk_size):
        enumerated += 1
        matched += hit
        if cex is not None:
            found.append(cex)
    return TheoremReport(
        theorem_id=theorem_id,
        r=r,
        n=n,
        weaken=weaken,
        degree_bound=bound,
        config=config.describe(),
        graphs_enumerated=enumerated,
        hypothesis_matches=matched,
        counterexamples=tuple(found),
        wall_time=time.perf_counter() - start,
    )


# -- oracle cross-checks ----------------------------------------------------

Oracle = Callable[[Graph], Union[bool, Factor, None]]


@dataclass(frozen=True)
class Check:
    """A characterization decider paired with an independent ground truth."""

    name: str
    decide: Callable[[Graph], Decision]
    oracle: Oracle
    connected_only: bool = False
    max_vertices: int | None = None


def _independent_form_oracle(G: Graph, n: int) -> bool:
    return has_sn_factor_independent_form(G, n).verdict


def default_checks() -> list[Check]:
    return [
        Check("S2-factor", partial(has_sn_factor, n=2), partial(find_factor, family=Family.stars(2))),
        Check("S3-factor", partial(has_sn_factor, n=3), partial(find_factor, family=Family.stars(3))),
        Check("P>=2-factor", has_p2_factor, partial(find_factor, family=Family.paths(2))),
        Check("P>=3-factor", has_p3_factor, partial(find_factor, family=Family.paths(3))),
        Check("S2-independent-form", partial(has_sn_factor, n=2), partial(_independent_form_oracle, n=2)),
        Check("S3-independent-form", partial(has_sn_factor, n=3), partial(_independent_form_oracle, n=3)),
        Check("P>=2-covered", is_p2_covered, partial(is_covered_bruteforce, family=Family.paths(2)), True),
        Check("P>=3-covered", is_p3_covered, partial(is_covered_bruteforce, family=Family.paths(3)), True),
        Check("{P2,P3}-covered", is_p2p3_covered, partial(is_covered_bruteforce, family=Family.p2p3()), True),
    ]


@dataclass(frozen=True)
class Disagreement:
    check: str
    graph6: str
    decided: bool
    oracle: bool
    reason: str
    witness: ViolationWitness | None = None

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "graph6": self.graph6,
            "decided": self.decided,
            "oracle": self.oracle,
            "reason": self.reason,
            "witness": None if self.witness is None else self.witness.as_dict(),
        }


@dataclass(frozen=True)
class CrosscheckReport:
    config: dict
    checks: tuple[str, ...]
    graphs_enumerated: int
    comparisons: dict
    disagreements: tuple[Disagreement, ...]
    wall_time: float = field(default=0.0, compare=False)

    @property
    def holds(self) -> bool:
        return not self.disagreements

    def as_dict(self, include_timing: bool = False) -> dict:
        doc = {
            "tool": "k1rfactors",
            "version": __version__,
            "config": self.config,
            "checks": list(self.checks),
            "graphs_enumerated": self.graphs_enumerated,
            "comparisons": self.comparisons,
            "disagreements": [d.as_dict() for d in self.disagreements],
        }
        if include_timing:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc

    def to_text(self, include_timing: bool = False) -> str:
        doc = self.as_dict(include_timing)
        lines = []
        for key, value in doc.items():
            if key == "disagreements":
                lines.append(f"disagreement_count: {len(value)}")
                lines.extend(f"disagreement: {json.dumps(d, sort_keys=True)}" for d in value)
            elif isinstance(value, (dict, list)):
                lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


def _crosscheck_one(G: Graph, checks: Sequence[Check]) -> list[tuple[str, Disagreement | None]]:
    out = []
    connected = is_connected(G)
    for check in checks:
        if check.connected_only and not connected:
            continue
        if check.max_vertices is not None and G.n > check.max_vertices:
            continue
        decision = check.decide(G)
        raw = check.oracle(G)
        truth = raw if isinstance(raw, bool) else raw is not None
        reason = None
        if decision.verdict != truth:
            reason = "verdict mismatch"
        elif not decision.verdict and not revalidate(G, decision.witness):
            reason = "witness does not revalidate"
        elif isinstance(raw, Factor) and not verify_factor(G, raw):
            reason = "oracle factor does not verify"
        problem = None
        if reason is not None:
            problem = Disagreement(check.name, write_graph6(G), decision.verdict, truth, reason, decision.witness)
        out.append((check.name, problem))
    return out


def oracle_crosscheck(config: SweepConfig, checks: Sequence[Check] | None = None) -> CrosscheckReport:
    """Compare each decider with its oracle on every enumerated graph."""
    checks = list(default_checks() if checks is None else checks)
    start = time.perf_counter()
    counts = {c.name: 0 for c in checks}
    problems = []
    enumerated = 0
    worker = partial(_crosscheck_one, checks=checks)
    for results in parallel_map(worker, enumerate_graphs(config), config.jobs, config.chunk_size):
        enumerated += 1
        for name, problem in results:
            counts[name] += 1
            if problem is not None:
                problems.append(problem)
    return CrosscheckReport(
        config=config.describe(),
        checks=tuple(c.name for c in checks),
        graphs_enumerated=enumerated,
        comparisons=counts,
        disagreements=tuple(problems),
        wall_time=time.perf_counter() - start,
    )
