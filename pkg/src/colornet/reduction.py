"""Vertex Cover instances as two-terminal color-connectivity questions.

Each edge ``{v_i, v_j}`` (``i < j``) of the input graph becomes a middle node
joined to terminal A by an edge of color ``i`` and to terminal B by an edge of
color ``j``.  Removing the colors of a vertex set cuts A from B exactly when
that set covers every edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from colornet.bounds import GuardExceeded
from colornet.connectivity import (
    ColorSeparator,
    connected_after_removal,
    is_pair_color_connected,
    min_color_separator,
)
from colornet.graph import ColoredEdgeGraph, FormatError, new_graph

__all__ = [
    "PlainGraph",
    "ReductionInstance",
    "A",
    "B",
    "parse_dimacs",
    "vc_to_ceconnect",
    "vertex_cover_exists",
    "min_vertex_cover",
    "cover_to_separator",
    "certify_reduction",
]

A = 0
B = 1

VC_LIMIT = 24


@dataclass(frozen=True)
class PlainGraph:
    """Simple undirected graph on nodes ``0..n-1``; edges stored as sorted pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("node count must be >= 0")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {self.n})")
            pair = (min(u, v), max(u, v))
            if pair in canon:
                raise ValueError(f"duplicate edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))


@dataclass(frozen=True)
class ReductionInstance:
    graph: ColoredEdgeGraph
    a: int
    b: int
    t: int

    def sidecar(self) -> str:
        return json.dumps({"a": self.a, "b": self.b, "t": self.t}) + "\n"


def parse_dimacs(text: str) -> PlainGraph:
    """Read a ``p edge n m`` / ``e u v`` edge list (1-indexed, ``c`` comments)."""
    n = None
    declared = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if n is not None or len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise FormatError("expected one 'p edge <n> <m>' line")
                n, declared = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if n is None or len(parts) != 3:
                    raise FormatError("'e u v' before header or malformed")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise FormatError(f"vertex out of range 1..{n}")
                edges.append((u - 1, v - 1))
            else:
                raise FormatError(f"unknown line type {parts[0]!r}")
        except (ValueError, FormatError) as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise FormatError("missing 'p edge' header")
    if declared != len(edges):
        raise FormatError(f"header declares {declared} edges, found {len(edges)}")
    try:
        return PlainGraph(n, tuple(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def vc_to_ceconnect(g: PlainGraph, t: int) -> ReductionInstance:
    """Build the two-terminal colored graph for the Vertex Cover instance ``(g, t)``.

    Node 0 is A, node 1 is B, node ``2 + k`` stands for the ``k``-th edge of
    ``g`` in sorted order.  Color ``i`` is vertex ``i``.
    """
    if not 1 <= t <= g.n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={g.n}")
    triples = []
    for k, (i, j) in enumerate(g.edges):
        mid = 2 + k
        triples.append((A, mid, i))
        triples.append((mid, B, j))
    labels = (
        ["A", "B"] + [f"e({i + 1},{j + 1})" for i, j in g.edges],
        [f"c{v + 1}" for v in range(g.n)],
    )
    graph = new_graph(2 + len(g.edges), g.n, triples, labels)
    return ReductionInstance(graph, A, B, t)


def _check_vc_size(g: PlainGraph) -> None:
    if g.n > VC_LIMIT:
        raise GuardExceeded(f"exhaustive vertex cover limited to {VC_LIMIT} vertices")


def min_vertex_cover(g: PlainGraph) -> tuple[int, ...]:
    """A smallest vertex cover; the lexicographically first among equals."""
    _check_vc_size(g)
    for size in range(g.n + 1):
        for cand in combinations(range(g.n), size):
            chosen = set(cand)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return cand
    raise AssertionError("the full vertex set is always a cover")


def vertex_cover_exists(g: PlainGraph, t: int) -> bool:
    _check_vc_size(g)
    return len(min_vertex_cover(g)) <= t


def cover_to_separator(cover: tuple[int, ...]) -> tuple[int, ...]:
    """Colors of the cover's vertices; they cut A from B when ``cover`` is a cover."""
    return tuple(sorted(cover))


def certify_reduction(g: PlainGraph, t: int) -> bool:
    """Whether Vertex Cover and the reduced separator question agree on ``(g, t)``.

    A ``False`` return means the reduction (or a checker) is broken.
    """
    inst = vc_to_ceconnect(g, t)
    has_cover = vertex_cover_exists(g, t)
    sep: ColorSeparator | None = min_color_separator(inst.graph, (inst.a, inst.b))
    has_separator = sep is not None and sep.size <= t
    connected = is_pair_color_connected(inst.graph, inst.a, inst.b, t)
    if has_cover:
        cover = min_vertex_cover(g)
        if connected_after_removal(inst.graph, cover_to_separator(cover), (inst.a, inst.b)):
            return False
    return has_cover == has_separator == (not connected)
