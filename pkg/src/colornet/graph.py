"""Colored edge graphs: data model, validation, JSON interchange and DOT output.

Nodes and colors are dense integer ids (``0..n-1`` and ``0..m-1``).  Edges are
undirected and stored canonically as ``(u, v, color)`` with ``u < v``, sorted,
so two graphs with the same edge set compare and serialize identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "ColoredEdge",
    "ColoredEdgeGraph",
    "GraphError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "ColorRangeError",
    "NodeRangeError",
    "FormatError",
    "new_graph",
    "color_classes",
    "is_onto",
    "parse_graph",
    "serialize_graph",
    "to_dot",
    "DOT_PALETTE",
]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class ColorRangeError(GraphError):
    pass


class NodeRangeError(GraphError):
    pass


class FormatError(GraphError):
    """The document is not a well-formed JSON interchange graph."""


@dataclass(frozen=True, order=True)
class ColoredEdge:
    u: int
    v: int
    color: int

    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class ColoredEdgeGraph:
    """An immutable colored edge graph G(V, E, C, f).

    Build instances with :func:`new_graph`, which validates and canonicalizes.
    ``labels`` optionally carries display names for nodes and colors; it
    never affects any algorithm.
    """

    n: int
    m: int
    edges: tuple[ColoredEdge, ...]
    labels: tuple[tuple[str, ...], tuple[str, ...]] | None = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_arrays(self) -> tuple[list[int], list[int], list[int]]:
        """Parallel ``(us, vs, colors)`` lists, as consumed by the kernels."""
        return (
            [e.u for e in self.edges],
            [e.v for e in self.edges],
            [e.color for e in self.edges],
        )

    def triples(self) -> list[tuple[int, int, int]]:
        return [(e.u, e.v, e.color) for e in self.edges]

    def degree(self, node: int) -> int:
        return sum(1 for e in self.edges if node in (e.u, e.v))


def new_graph(
    n: int,
    m: int,
    edges: Iterable[Sequence[int]],
    labels: tuple[Sequence[str], Sequence[str]] | None = None,
) -> ColoredEdgeGraph:
    """Validate ``(u, v, color)`` triples and return a canonical graph.

    Raises a :class:`GraphError` subclass naming the first offending edge.
    ``m == 0`` is allowed only for edgeless graphs.
    """
    if n < 1:
        raise GraphError(f"node count must be >= 1, got {n}")
    if m < 0:
        raise GraphError(f"palette size must be >= 0, got {m}")
    seen: set[tuple[int, int]] = set()
    canon: list[ColoredEdge] = []
    for raw in edges:
        if len(raw) != 3:
            raise FormatError(f"edge {list(raw)!r} is not a [u, v, color] triple")
        u, v, c = (int(x) for x in raw)
        if u == v:
            raise SelfLoopError(f"edge ({u}, {v}, {c}) is a self-loop")
        if not (0 <= u < n and 0 <= v < n):
            raise NodeRangeError(f"edge ({u}, {v}, {c}) has a node outside [0, {n})")
        if not 0 <= c < m:
            raise ColorRangeError(f"edge ({u}, {v}, {c}) has a color outside [0, {m})")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdgeError(f"edge ({u}, {v}, {c}) repeats node pair ({u}, {v})")
        seen.add((u, v))
        canon.append(ColoredEdge(u, v, c))
    canon.sort()
    norm_labels = None
    if labels is not None:
        node_labels, color_labels = (tuple(str(x) for x in part) for part in labels)
        if len(node_labels) != n or len(color_labels) != m:
            raise FormatError(
                f"labels need {n} node names and {m} color names, got "
                f"{len(node_labels)} and {len(color_labels)}"
            )
        norm_labels = (node_labels, color_labels)
    return ColoredEdgeGraph(n, m, tuple(canon), norm_labels)


def color_classes(g: ColoredEdgeGraph) -> list[list[ColoredEdge]]:
    """Edges grouped by color; entry ``c`` is E_c (possibly empty)."""
    classes: list[list[ColoredEdge]] = [[] for _ in range(g.m)]
    for e in g.edges:
        classes[e.color].append(e)
    return classes


def is_onto(g: ColoredEdgeGraph) -> bool:
    """True when every palette color is used by at least one edge."""
    return all(color_classes(g))


def _document(g: ColoredEdgeGraph) -> dict:
    doc: dict = {"n": g.n, "m": g.m, "edges": [list(t) for t in g.triples()]}
    if g.labels is not None:
        doc["labels"] = {"nodes": list(g.labels[0]), "colors": list(g.labels[1])}
    return doc


def serialize_graph(g: ColoredEdgeGraph) -> str:
    return json.dumps(_document(g)) + "\n"


def parse_graph(text: str) -> ColoredEdgeGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    return graph_from_document(doc)


def graph_from_document(doc: object) -> ColoredEdgeGraph:
    if not isinstance(doc, dict):
        raise FormatError("graph document must be a JSON object")
    for key in ("n", "m", "edges"):
        if key not in doc:
            raise FormatError(f"missing field {key!r}")
    n, m, edges = doc["n"], doc["m"], doc["edges"]
    if not (_is_int(n) and _is_int(m)):
        raise FormatError("fields 'n' and 'm' must be integers")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and all(_is_int(x) for x in e) for e in edges
    ):
        raise FormatError("'edges' must be a list of integer triples")
    labels = None
    if doc.get("labels") is not None:
        raw = doc["labels"]
        if not isinstance(raw, dict) or set(raw) - {"nodes", "colors"}:
            raise FormatError("'labels' must be an object with 'nodes' and 'colors'")
        nodes = raw.get("nodes", [str(i) for i in range(n)])
        colors = raw.get("colors", [f"c{c}" for c in range(m)])
        labels = (nodes, colors)
    return new_graph(n, m, edges, labels)


def _is_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


DOT_PALETTE = (
    "red",
    "blue",
    "green3",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan4",
)


def to_dot(g: ColoredEdgeGraph, name: str = "G") -> str:
    """Render ``g`` as an undirected DOT graph, one palette color per edge."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{_escape(g.labels[0][v])}"];')
        else:
            lines.append(f"  {v};")
    for e in g.edges:
        label = g.labels[1][e.color] if g.labels is not None else f"c{e.color}"
        color = DOT_PALETTE[e.color % len(DOT_PALETTE)]
        lines.append(f'  {e.u} -- {e.v} [color="{color}", label="{_escape(label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')
