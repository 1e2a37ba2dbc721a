"""Command-line front end.

Exit codes: 0 success, 1 bad input or parse failure, 2 search budget
exceeded.  Every subcommand offers --json with the same data as the
human-readable output; identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .budget import Budget, BudgetExceededError, DEFAULT_BUDGET
from .cliques import covering_to_text, minimum_total_coverings, theta_t
from .coding import code, parse_sequence, render_sequence
from .graph_io import load_graph, render_edge_list
from .graphs import Graph, divisor_graph, generate_family, realize_sequence
from .oracle import ORACLE_MAX_VERTICES, brute_force_isomorphic
from .polynomials import (canonical_polynomial, closed_form_family,
                          divisor_graph_polynomial_closed_form)
from .verification import run_invariant_suite

BUDGET_ENV_VAR = "GRAPHCODE_BUDGET"


def _budget_from(args: argparse.Namespace) -> Budget:
    if args.budget is not None:
        return Budget(args.budget)
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is not None:
        try:
            return Budget(int(raw))
        except ValueError:
            raise ValueError(f"bad {BUDGET_ENV_VAR} value {raw!r}") from None
    return Budget(DEFAULT_BUDGET)


def _emit(args: argparse.Namespace, data: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print("\n".join(human))


def _load(args: argparse.Namespace, path: str) -> Graph:
    return load_graph(path, args.format)


def _cmd_code(args) -> int:
    g = _load(args, args.graph)
    sigma = code(g, _budget_from(args))
    _emit(args, {"code": list(sigma)}, [render_sequence(sigma)])
    return 0


def _cmd_poly(args) -> int:
    g = _load(args, args.graph)
    polynomial = canonical_polynomial(g, _budget_from(args))
    _emit(args, {"polynomial": polynomial.render()}, [polynomial.render()])
    return 0


def _cmd_theta(args) -> int:
    g = _load(args, args.graph)
    tracker = _budget_from(args)
    coverings = minimum_total_coverings(g, tracker)
    data = {"theta_t": len(coverings[0]), "minimum_covering_count": len(coverings)}
    _emit(args, data, [f"theta_t: {data['theta_t']}",
                       f"minimum coverings: {data['minimum_covering_count']}"])
    return 0


def _cmd_covers(args) -> int:
    g = _load(args, args.graph)
    coverings = minimum_total_coverings(g, _budget_from(args))
    data = {"theta_t": len(coverings[0]),
            "coverings": [[sorted(c) for c in cov] for cov in coverings]}
    human = []
    for i, cov in enumerate(coverings, start=1):
        human.append(f"covering {i}:")
        human.append(covering_to_text(cov).rstrip("\n"))
    _emit(args, data, human)
    return 0


def _cmd_iso(args) -> int:
    g1 = _load(args, args.graph1)
    g2 = _load(args, args.graph2)
    tracker = _budget_from(args)
    verdict = False
    code1 = code(g1, tracker)
    code2 = code(g2, tracker) if g1.vertex_count == g2.vertex_count else None
    verdict = code2 is not None and code1 == code2
    data = {"isomorphic": verdict, "code1": list(code1),
            "code2": list(code2) if code2 is not None else None}
    human = [f"isomorphic: {str(verdict).lower()}",
             f"code 1: {render_sequence(code1)}",
             f"code 2: {render_sequence(code2) if code2 is not None else '(different vertex count)'}"]
    if args.oracle:
        report = brute_force_isomorphic(g1, g2, tracker)
        agrees = report.verdict == verdict
        data["oracle"] = {"isomorphic": report.verdict, "agrees": agrees,
                          "nodes_searched": report.nodes_searched}
        human.append(f"oracle: {str(report.verdict).lower()} "
                     f"({'agrees' if agrees else 'DISAGREES'}, "
                     f"{report.nodes_searched} nodes)")
        if not agrees:
            _emit(args, data, human)
            raise AssertionError("code-based verdict disagrees with the oracle")
    _emit(args, data, human)
    return 0


def _cmd_divisor(args) -> int:
    labeled = divisor_graph(args.n)
    g = labeled.graph
    data = {"n": args.n, "vertices": g.vertex_count,
            "labels": list(labeled.labels),
            "edges": [list(e) for e in g.sorted_edges()]}
    human = [f"divisor graph of {args.n}: {g.vertex_count} vertices, {g.edge_count} edges",
             "labels: " + " ".join(str(d) for d in labeled.labels),
             render_edge_list(g).rstrip("\n")]
    closed = divisor_graph_polynomial_closed_form(args.n)
    if args.closed_form:
        data["polynomial"] = closed.render()
        data["method"] = "closed-form"
        human.append(f"F (closed form): {closed.render()}")
    else:
        tracker = _budget_from(args)
        theta = theta_t(g, tracker)
        pipeline = canonical_polynomial(g, tracker)
        agrees = pipeline == closed
        data.update({"theta_t": theta, "polynomial": pipeline.render(),
                     "method": "pipeline", "closed_form_agrees": agrees})
        human.append(f"theta_t: {theta}")
        human.append(f"F: {pipeline.render()}")
        human.append(f"closed-form cross-check: {'ok' if agrees else 'MISMATCH'}")
        if not agrees:
            _emit(args, data, human)
            raise AssertionError("pipeline polynomial disagrees with the closed form")
    _emit(args, data, human)
    return 0


def _cmd_realize(args) -> int:
    entries = parse_sequence(args.sequence)
    labeled = realize_sequence(entries)
    data = {"labels": list(labeled.labels),
            "edges": [list(e) for e in labeled.graph.sorted_edges()],
            "vertices": labeled.graph.vertex_count}
    _emit(args, data, [render_edge_list(labeled.graph).rstrip("\n")])
    return 0


def _cmd_gen(args) -> int:
    g = generate_family(args.family, args.n)
    data = {"family": args.family, "n": args.n,
            "edges": [list(e) for e in g.sorted_edges()],
            "vertices": g.vertex_count}
    human = [render_edge_list(g).rstrip("\n")]
    if args.closed_form:
        sigma, polynomial = closed_form_family(args.family, args.n)
        data["code"] = list(sigma)
        data["polynomial"] = polynomial.render()
        human.append(f"code: {render_sequence(sigma)}")
        human.append(f"F: {polynomial.render()}")
    _emit(args, data, human)
    return 0


def _cmd_verify(args) -> int:
    g = _load(args, args.graph)
    results = run_invariant_suite(g, _budget_from(args))
    data = {"checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                       for r in results],
            "all_passed": all(r.passed for r in results)}
    human = []
    for r in results:
        mark = "ok" if r.passed else "FAIL"
        human.append(f"{mark:4} {r.name}" + (f"  [{r.detail}]" if r.detail else ""))
    human.append("all checks passed" if data["all_passed"] else "SOME CHECKS FAILED")
    _emit(args, data, human)
    return 0 if data["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcode",
        description="Canonical codes and polynomial forms for simple graphs "
                    "via minimum total clique coverings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true",
                       help="emit a single JSON object instead of text")
        p.add_argument("--budget", type=int, default=None, metavar="NODES",
                       help=f"search node budget (default {DEFAULT_BUDGET}, "
                            f"or ${BUDGET_ENV_VAR})")
        p.add_argument("--format", choices=["auto", "edge-list", "dimacs", "graph6"],
                       default="auto", help="input graph format (default: auto)")

    p = sub.add_parser("code", help="canonical code of a graph")
    p.add_argument("graph")
    common(p)
    p.set_defaults(run=_cmd_code)

    p = sub.add_parser("poly", help="canonical polynomial of a graph")
    p.add_argument("graph")
    common(p)
    p.set_defaults(run=_cmd_poly)

    p = sub.add_parser("theta", help="minimum total clique covering size")
    p.add_argument("graph")
    common(p)
    p.set_defaults(run=_cmd_theta)

    p = sub.add_parser("covers", help="all minimum total clique coverings")
    p.add_argument("graph")
    common(p)
    p.set_defaults(run=_cmd_covers)

    p = sub.add_parser("iso", help="decide isomorphism by code")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force oracle and compare")
    common(p)
    p.set_defaults(run=_cmd_iso)

    p = sub.add_parser("divisor", help="divisor graph of n with its polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--closed-form", action="store_true",
                   help="use the closed form instead of the full pipeline")
    common(p)
    p.set_defaults(run=_cmd_divisor)

    p = sub.add_parser("realize", help="graph realized by an integer sequence")
    p.add_argument("--sequence", required=True, metavar="a1,a2,...",
                   help='entries, e.g. "2,3,10,15"')
    common(p)
    p.set_defaults(run=_cmd_realize)

    p = sub.add_parser("gen", help="generate a named graph family member")
    p.add_argument("--family", required=True,
                   choices=["complete", "path", "cycle", "empty"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--closed-form", action="store_true",
                   help="also print the known code and polynomial")
    common(p)
    p.set_defaults(run=_cmd_gen)

    p = sub.add_parser("verify", help="run the invariant suite on a graph")
    p.add_argument("graph")
    common(p)
    p.set_defaults(run=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
