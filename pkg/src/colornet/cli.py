"""Command-line interface.

Exit status: 0 on success or a positive answer, 1 on a well-formed negative
answer (infeasible, not connected, certification failed), 2 on usage or
input errors.  Every subcommand accepts ``--json`` for machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from colornet.bounds import GuardExceeded, Verdict, bounds_report
from colornet.connectivity import ColorSeparator, is_color_connected, min_color_separator
from colornet.constructions import ConstructionError, design, gadget_search
from colornet.graph import (
    ColoredEdgeGraph,
    GraphError,
    parse_graph,
    serialize_graph,
    to_dot,
)
from colornet.reduction import certify_reduction, parse_dimacs, vc_to_ceconnect

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2

# Fallback search for designs outside the explicit families.
SEARCH_MAX_NODES = 7
SEARCH_MAX_STEPS = 2_000_000


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _load_graph(path: str) -> ColoredEdgeGraph:
    return parse_graph(_read(path))


def _separator_payload(sep: ColorSeparator) -> dict:
    return {
        "colors": list(sep.colors),
        "scope": None if sep.scope is None else list(sep.scope),
        "side": sorted(sep.side),
        "other": sorted(sep.other),
    }


def _separator_lines(sep: ColorSeparator) -> list[str]:
    scope = "whole graph" if sep.scope is None else f"nodes {sep.scope[0]} and {sep.scope[1]}"
    colors = "{" + ", ".join(f"c{c}" for c in sep.colors) + "}"
    return [
        f"minimum separator ({scope}): {colors}, size {sep.size}",
        f"  side:  {sorted(sep.side)}",
        f"  other: {sorted(sep.other)}",
    ]


def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        rep = bounds_report(args.n, args.m, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [
        f"n={rep.n} m={rep.m} t={rep.t}",
        f"degree_bound={rep.degree_bound}  [{rep.justification['degree_bound']}]",
        f"mu_bound={rep.mu_bound}  [{rep.justification['mu_bound']}]",
    ]
    if rep.case_bound is not None:
        lines.append(f"case_bound={rep.case_bound}  [{rep.justification['case_bound']}]")
    if rep.lambda_min is not None:
        lines.append(f"lambda_min={rep.lambda_min}  [{rep.justification['lambda_min']}]")
    lines.append(f"verdict: {rep.verdict.value}")
    _emit(args, rep.as_dict(), lines)
    return EXIT_NO if rep.verdict is Verdict.INFEASIBLE else EXIT_OK


def cmd_design(args: argparse.Namespace) -> int:
    n, m, t, lam = args.n, args.m, args.t, args.lam
    try:
        rep = bounds_report(n, m, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    infeasible = rep.lambda_min is None or (lam is not None and lam < rep.lambda_min)
    graph = family = None
    if not infeasible:
        try:
            graph, family = design(n, m, t, lam)
        except ConstructionError:
            target = lam if lam is not None else rep.lambda_min
            if n <= SEARCH_MAX_NODES:
                try:
                    graph = gadget_search(n, m, t, target, max_steps=SEARCH_MAX_STEPS)
                except GuardExceeded:
                    graph = None
                family = "search"
    if graph is None:
        payload = {"ok": False, "bounds": rep.as_dict()}
        lines = [f"no design for n={n} m={m} t={t}" + ("" if lam is None else f" lambda={lam}")]
        lines.append(f"verdict: {rep.verdict.value}, lambda_min={rep.lambda_min}")
        _emit(args, payload, lines)
        return EXIT_NO
    if not is_color_connected(graph, t):
        raise AssertionError("design failed re-verification")
    text = serialize_graph(graph)
    if args.out:
        _write(args.out, text)
    payload = {
        "ok": True,
        "construction": family,
        "lambda": graph.num_edges,
        "lambda_min": rep.lambda_min,
        "graph": json.loads(text),
    }
    lines = [
        f"construction: {family}",
        f"lambda={graph.num_edges} (lambda_min={rep.lambda_min}), verified (t+1)-color connected at t={t}",
    ]
    if not args.out:
        lines.append(text.rstrip("\n"))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not 0 <= args.t <= g.m:
        raise UsageError(f"-t must lie in [0, {g.m}]")
    ok = is_color_connected(g, args.t)
    payload: dict = {"connected": ok, "t": args.t}
    lines = [f"{'yes' if ok else 'no'}: graph is {'' if ok else 'not '}{args.t + 1}-color connected"]
    if not ok:
        sep = min_color_separator(g, max_size=args.t)
        payload["separator"] = _separator_payload(sep)
        lines += _separator_lines(sep)
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_NO


def cmd_separator(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    pair = None
    if args.pair:
        if len(args.pair) != 2:
            raise UsageError("give either no nodes or exactly two")
        pair = (args.pair[0], args.pair[1])
    try:
        sep = min_color_separator(g, pair)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if sep is None:
        _emit(args, {"separator": None}, ["no separator: nothing to disconnect"])
        return EXIT_NO
    _emit(args, {"separator": _separator_payload(sep)}, _separator_lines(sep))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    plain = parse_dimacs(_read(args.dimacs))
    try:
        inst = vc_to_ceconnect(plain, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = serialize_graph(inst.graph)
    if args.out:
        _write(args.out, text)
        _write(str(Path(args.out).with_suffix(".meta.json")), inst.sidecar())
    g = inst.graph
    payload: dict = {"a": inst.a, "b": inst.b, "t": inst.t, "graph": json.loads(text)}
    lines = [f"reduction: {g.n} nodes, {g.num_edges} edges, {g.m} colors; A={inst.a} B={inst.b} t={inst.t}"]
    if not args.out:
        lines.append(text.rstrip("\n"))
    status = EXIT_OK
    if args.certify:
        try:
            ok = certify_reduction(plain, args.t)
        except GuardExceeded as exc:
            raise UsageError(str(exc)) from None
        payload["certified"] = ok
        lines.append(f"certified: {'yes' if ok else 'NO'}")
        status = EXIT_OK if ok else EXIT_NO
    _emit(args, payload, lines)
    return status


def cmd_dot(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    dot = to_dot(g)
    if args.out:
        _write(args.out, dot)
    if args.json:
        print(json.dumps({"dot": dot}))
    elif not args.out:
        sys.stdout.write(dot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colornet", description="Design and verify color-connected networks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    def params(p: argparse.ArgumentParser) -> None:
        p.add_argument("-n", type=int, required=True, help="number of nodes")
        p.add_argument("-m", type=int, required=True, help="number of colors")
        p.add_argument("-t", type=int, required=True, help="number of colors that may fail")

    p = common(sub.add_parser("bounds", help="lower bounds and feasibility for (n, m, t)"))
    params(p)
    p.set_defaults(func=cmd_bounds)

    p = common(sub.add_parser("design", help="build a minimum-edge design"))
    params(p)
    p.add_argument("--lambda", dest="lam", type=int, help="target edge count")
    p.add_argument("--out", metavar="PATH", help="write the graph JSON here")
    p.set_defaults(func=cmd_design)

    p = common(sub.add_parser("check", help="is the graph (t+1)-color connected?"))
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("-t", type=int, required=True, help="number of colors that may fail")
    p.set_defaults(func=cmd_check)

    p = common(sub.add_parser("separator", help="minimum color separator"))
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("pair", nargs="*", type=int, help="optional node pair A B")
    p.set_defaults(func=cmd_separator)

    p = common(sub.add_parser("reduce", help="Vertex Cover (DIMACS) to two-terminal instance"))
    p.add_argument("dimacs", help="DIMACS edge list")
    p.add_argument("-t", type=int, required=True, help="cover size / separator size")
    p.add_argument("--out", metavar="PATH", help="write the graph JSON here (plus .meta.json)")
    p.add_argument("--certify", action="store_true", help="check the reduction by brute force")
    p.set_defaults(func=cmd_reduce)

    p = common(sub.add_parser("dot", help="export a graph as Graphviz DOT"))
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--out", metavar="PATH", help="write the DOT text here")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
