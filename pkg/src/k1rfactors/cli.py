"""Command-line interface.

Exit status: 0 when the verdict is true or a sweep found nothing, 1 when a
verdict is false or counterexamples/disagreements were found, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .analysis import DECIDERS, Decision, DisconnectedGraphError
from .constructions import THEOREMS, big_sun, odd_cycle, sharpness_graph
from .enumeration import SweepConfig
from .graph import Graph, GraphError, find_induced_star, is_connected, min_degree
from .harness import THEOREM_IDS, default_checks, oracle_crosscheck, verify_theorem
from .io import parse_edge_list, read_graph6_lines, write_edge_list, write_graph6
from .search import ORACLE_CAP, Family, find_factor

log = logging.getLogger("k1rfactors")

_FACTOR_FAMILY = {
    "p2-factor": lambda n: Family.paths(2),
    "p3-factor": lambda n: Family.paths(3),
    "sn-factor": Family.stars,
}


def _read_graphs(path: str, fmt: str) -> list[Graph]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    graphs = list(read_graph6_lines(text.splitlines()))
    if not graphs:
        raise GraphError("no graphs in input")
    return graphs


def _emit_graph(G: Graph, fmt: str) -> str:
    return write_edge_list(G).rstrip("\n") if fmt == "edgelist" else write_graph6(G)


def _decide(prop: str, G: Graph, n: int) -> Decision:
    decider = DECIDERS[prop]
    decision = decider(G, n) if prop == "sn-factor" else decider(G)
    if decision.verdict and prop in _FACTOR_FAMILY and G.n <= ORACLE_CAP:
        factor = find_factor(G, _FACTOR_FAMILY[prop](n))
        decision = Decision(True, None, factor)
    return decision


def _decision_doc(decision: Decision) -> dict:
    return {
        "verdict": decision.verdict,
        "witness": None if decision.witness is None else decision.witness.as_dict(),
        "factor": None if decision.factor is None else decision.factor.as_dict(),
    }


def _decision_line(name: str, doc: dict) -> str:
    line = f"{name}: {str(doc['verdict']).lower()}"
    if doc["witness"]:
        line += f" witness={json.dumps(doc['witness'], sort_keys=True)}"
    if doc["factor"]:
        comps = [c["vertices"] for c in doc["factor"]["components"]]
        line += f" factor={json.dumps(comps)}"
    return line


def _write_json(path: str | None, doc) -> None:
    if path:
        Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def cmd_analyze(args: argparse.Namespace) -> int:
    docs = []
    for G in _read_graphs(args.file, args.format):
        star = find_induced_star(G, args.r)
        doc = {
            "graph": _emit_graph(G, args.format),
            "vertices": G.n,
            "edges": G.edge_count,
            "min_degree": min_degree(G) if G.n else None,
            "k1r_free": star is None,
            "induced_star": None if star is None else {"center": star.center, "leaves": list(star.leaves)},
            "decisions": {},
        }
        for prop in DECIDERS:
            if prop.endswith("covered") and not is_connected(G):
                doc["decisions"][prop] = None
                continue
            doc["decisions"][prop] = _decision_doc(_decide(prop, G, args.n))
        docs.append(doc)
        print(f"graph: {doc['graph']}")
        print(f"min_degree: {doc['min_degree']}")
        print(f"k1r_free (r={args.r}): {str(doc['k1r_free']).lower()}"
              + ("" if star is None else f" induced_star={doc['induced_star']}"))
        for prop, d in doc["decisions"].items():
            label = f"sn-factor (n={args.n})" if prop == "sn-factor" else prop
            print(f"{label}: n/a (disconnected)" if d is None else _decision_line(label, d))
    _write_json(args.json, {"version": __version__, "r": args.r, "n": args.n, "graphs": docs})
    return 0


def cmd_decide(args: argparse.Namespace) -> int:
    results = []
    for G in _read_graphs(args.file, args.format):
        doc = _decision_doc(_decide(args.property, G, args.n))
        doc["graph"] = _emit_graph(G, args.format)
        results.append(doc)
        print(_decision_line(args.property, doc))
    _write_json(args.json, {"version": __version__, "property": args.property, "n": args.n, "results": results})
    return 0 if all(d["verdict"] for d in results) else 1


def cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == "sun":
        G = big_sun(odd_cycle(args.k))
        print(_emit_graph(G, args.format))
        _write_json(args.json, {"version": __version__, "kind": "sun", "k": args.k, "graph": write_graph6(G)})
        return 0
    if args.r is None:
        raise GraphError("--r is required for sharpness constructions")
    n = args.n if args.kind == "T1-1" else None
    case = sharpness_graph(args.kind, args.r, n)
    doc = {
        "version": __version__,
        "theorem_id": case.theorem_id,
        "r": case.r,
        "n": case.n,
        "graph": write_graph6(case.graph),
        "expected_delta": case.expected_delta,
        "core": sorted(case.core),
        "deficiency": case.deficiency,
        "bound": case.bound,
        "epsilon": case.epsilon,
        "violating": case.violating,
    }
    print(_emit_graph(case.graph, args.format))
    for key in ("expected_delta", "core", "deficiency", "bound", "epsilon", "violating"):
        print(f"{key}: {doc[key]}")
    _write_json(args.json, doc)
    return 0


def _sweep_config(args: argparse.Namespace, connected_only: bool = False) -> SweepConfig:
    return SweepConfig(max_vertices=args.max_vertices, dedup=args.dedup,
                       connected_only=connected_only or args.connected_only, jobs=args.jobs)


def cmd_verify(args: argparse.Namespace) -> int:
    n = args.n if args.theorem_id == "T1-1" else None
    report = verify_theorem(args.theorem_id, args.r, n, _sweep_config(args), weaken=args.weaken)
    sys.stdout.write(report.to_text())
    log.info("sweep finished in %.2fs", report.wall_time)
    _write_json(args.json, report.as_dict())
    return 0 if report.holds else 1


def cmd_oracle_check(args: argparse.Namespace) -> int:
    checks = default_checks()
    if args.checks:
        wanted = set(args.checks)
        unknown = wanted - {c.name for c in checks}
        if unknown:
            raise GraphError(f"unknown checks: {sorted(unknown)}")
        checks = [c for c in checks if c.name in wanted]
    report = oracle_crosscheck(_sweep_config(args), checks)
    sys.stdout.write(report.to_text())
    log.info("cross-check finished in %.2fs", report.wall_time)
    _write_json(args.json, report.as_dict())
    return 0 if report.holds else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6",
                        help="graph input/output format (default: graph6)")
    common.add_argument("--json", metavar="PATH", help="also write a JSON document here")
    common.add_argument("--jobs", type=int, default=1, metavar="W", help="worker processes for sweeps")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="k1rfactors", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="degree, K_{1,r}-freeness and all six decisions")
    p.add_argument("file", help="input file, '-' for stdin")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, default=2, help="star family parameter (default 2)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", parents=[common], help="decide one property with a certificate")
    p.add_argument("property", choices=sorted(DECIDERS))
    p.add_argument("file")
    p.add_argument("--n", type=int, default=2, help="star family parameter for sn-factor")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", parents=[common], help="emit an extremal graph or a sun")
    p.add_argument("kind", choices=THEOREMS + ("sun",))
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int, default=2, help="star parameter for T1-1 (default 2)")
    p.add_argument("--k", type=int, default=3, help="odd cycle order of the sun's core (default 3)")
    p.set_defaults(func=cmd_construct)

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--max-vertices", type=int, required=True)
    sweep.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    sweep.add_argument("--connected-only", action="store_true")

    p = sub.add_parser("verify", parents=[common, sweep], help="exhaustively check a theorem")
    p.add_argument("theorem_id", choices=THEOREM_IDS)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, default=2, help="star parameter for T1-1 (default 2)")
    p.add_argument("--weaken", type=int, default=0, metavar="D", help="lower the degree bound by D")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-check", parents=[common, sweep], help="deciders versus brute-force search")
    p.add_argument("--checks", nargs="+", metavar="NAME",
                   help="subset of: " + ", ".join(c.name for c in default_checks()))
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, DisconnectedGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
