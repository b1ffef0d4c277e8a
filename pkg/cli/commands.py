"""Subcommands of main.py. Each returns (payload, text, ok): payload is JSON-ready, text is the
--text rendering, ok decides the exit status."""
import argparse
from pathlib import Path
from typing import Any, List, Optional, Tuple
from algebra.ideals import groebner
from algebra.polynomials import render
from classifier.report import classify
from critical.corank import algebraic_corank
from critical.forbidden import forb_search
from critical.groups import critical_group, spanning_tree_count
from critical.laplacian import critical_ideal
from graphs.components.constructions import family_graph
from graphs.components.graph6 import emit_graph6, parse_edge_list, parse_graph6, read_graph6_file
from graphs.graph import Graph
from utils.errors import GraphArgumentError
from verification.suites import SUITES, verify_all

CommandResult = Tuple[Any, str, bool]


def _graph6(G: Graph) -> Optional[str]:
    return emit_graph6(G) if G.is_simple() else None


def _name(G: Graph) -> str:
    return _graph6(G) or f"multigraph on {G.n} vertices"


def load_graphs(args: argparse.Namespace) -> List[Graph]:
    """Graphs named by the positional graph6 string, --edges, --family or --g6-file."""
    sources = [s for s in (args.graph6, args.edges, args.family, args.g6_file) if s]
    if len(sources) != 1:
        raise GraphArgumentError("Give exactly one of: a graph6 string, --edges FILE, --family SPEC, --g6-file FILE")
    if args.graph6:
        return [parse_graph6(args.graph6)]
    if args.edges:
        return [parse_edge_list(Path(args.edges).read_text(encoding="utf-8"))]
    if args.family:
        return [family_graph(args.family)]
    return read_graph6_file(Path(args.g6_file))


def _each(graphs: List[Graph], single) -> CommandResult:
    results = [single(G) for G in graphs]
    payloads = [r[0] for r in results]
    return (
        payloads[0] if len(payloads) == 1 else payloads,
        "\n\n".join(r[1] for r in results),
        all(r[2] for r in results),
    )


def cmd_gamma(args: argparse.Namespace) -> CommandResult:
    def single(G: Graph) -> CommandResult:
        result = algebraic_corank(G, timings=args.timings)
        lines = [f"{_name(G)}: gamma = {result.gamma}"]
        for status in result.statuses:
            where = f" rows {status.rows} cols {status.cols}" if status.rows is not None else ""
            lines.append(f"  I_{status.index}: {status.status} ({status.method}{where})")
        if result.witness_kind:
            lines.append(f"  witness: {result.witness_kind}")
        return {"graph6": _graph6(G), **result.model_dump(mode="json", exclude_none=True)}, "\n".join(lines), True

    return _each(load_graphs(args), single)


def cmd_ideal(args: argparse.Namespace) -> CommandResult:
    def single(G: Graph) -> CommandResult:
        ideal = critical_ideal(G, args.k).ideal
        payload = {"graph6": _graph6(G), "k": args.k, "generators": ideal.serialize()}
        lines = [f"I_{args.k}({_name(G)}) = <{', '.join(payload['generators']) or '0'}>"]
        if args.groebner:
            basis = groebner(ideal)
            payload["groebner_basis"] = [render(g) for g in basis]
            lines.append(f"Groebner basis: <{', '.join(payload['groebner_basis']) or '0'}>")
        return payload, "\n".join(lines), True

    return _each(load_graphs(args), single)


def cmd_group(args: argparse.Namespace) -> CommandResult:
    def single(G: Graph) -> CommandResult:
        group = critical_group(G, args.base)
        payload = {
            "graph6": _graph6(G),
            "invariant_factors": group.factors.diag,
            "f1": group.f(1),
            "spanning_trees": spanning_tree_count(G),
        }
        text = f"K({_name(G)}) = {group.render()}  f1 = {payload['f1']}  trees = {payload['spanning_trees']}"
        return payload, text, True

    return _each(load_graphs(args), single)


def cmd_classify(args: argparse.Namespace) -> CommandResult:
    def single(G: Graph) -> CommandResult:
        report = classify(G)
        lines = [
            f"{report.graph6}: gamma = {report.gamma}, Γ≤1 {report.gamma_le1}, Γ≤2 {report.gamma_le2}",
            f"  family: {report.family.family + str(report.family.parameters) if report.family else '-'}",
            f"  forbidden pattern: {report.forbidden_hit or '-'}",
        ]
        if report.g2 is not None:
            lines.append(f"  𝒢₂: {report.g2.member} {report.g2.clause or ''}".rstrip())
        lines += [f"  note: {note}" for note in report.notes]
        return report.model_dump(mode="json"), "\n".join(lines), report.consistent

    return _each(load_graphs(args), single)


def cmd_forb_search(args: argparse.Namespace) -> CommandResult:
    found = [emit_graph6(G) for G in forb_search(args.k, args.n_max, args.jobs)]
    payload = {"k": args.k, "n_max": args.n_max, "graphs": found}
    return payload, f"Forb(Γ≤{args.k}) up to {args.n_max} vertices: {', '.join(found) or 'none'}", True


def cmd_verify(args: argparse.Namespace) -> CommandResult:
    suites = [s.strip().upper() for s in args.suites.split(",")] if args.suites else None
    report = verify_all(args.n_max, args.sweep_bound, suites, args.jobs, args.timings)
    return report, report.summary(), report.passed


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph6", nargs="?", help="graph6 string")
    parser.add_argument("--edges", help="edge-list file: n on the first line, then 'u v [m]' per line")
    parser.add_argument("--family", help="named graph such as tjoin:1,3,2, matching:6,2 or f2:Gaa")
    parser.add_argument("--g6-file", dest="g6_file", help="file with one graph6 string per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="critical-ideals", description="Critical ideals of graphs over the integers")
    parser.add_argument("--text", action="store_true", help="human-readable output instead of JSON")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes for sweeps")
    parser.add_argument("--save", action="store_true", help="also write the report under the reports directory")
    parser.add_argument("--timings", action="store_true", help="include timings in reports")
    parser.add_argument("--log-level", default=None, help="override logging.level")
    sub = parser.add_subparsers(dest="command", required=True)

    gamma_parser = sub.add_parser("gamma", help="algebraic co-rank with per-index decisions")
    _add_graph_input(gamma_parser)
    gamma_parser.set_defaults(handler=cmd_gamma)

    ideal_parser = sub.add_parser("ideal", help="generators of the k-th critical ideal")
    _add_graph_input(ideal_parser)
    ideal_parser.add_argument("--k", type=int, required=True)
    ideal_parser.add_argument("--groebner", action="store_true", help="also print the strong Groebner basis")
    ideal_parser.set_defaults(handler=cmd_ideal)

    group_parser = sub.add_parser("group", help="critical group and spanning-tree count")
    _add_graph_input(group_parser)
    group_parser.add_argument("--base", type=int, default=None, help="base vertex (default: last)")
    group_parser.set_defaults(handler=cmd_group)

    classify_parser = sub.add_parser("classify", help="Γ≤1, Γ≤2, 𝒢₂ membership with cross-checks")
    _add_graph_input(classify_parser)
    classify_parser.set_defaults(handler=cmd_classify)

    forb_parser = sub.add_parser("forb-search", help="minimal forbidden graphs of Γ≤k")
    forb_parser.add_argument("--k", type=int, required=True)
    forb_parser.add_argument("--n-max", dest="n_max", type=int, required=True)
    forb_parser.set_defaults(handler=cmd_forb_search)

    verify_parser = sub.add_parser("verify", help="run the verification suites")
    verify_parser.add_argument("--n-max", dest="n_max", type=int, default=None)
    verify_parser.add_argument("--sweep-bound", dest="sweep_bound", type=int, default=None)
    verify_parser.add_argument("--suites", default=None, help=f"comma-separated subset of {','.join(SUITES)}")
    verify_parser.set_defaults(handler=cmd_verify)
    return parser
