"""Exact color-connectivity queries.

A graph is (t+1)-color connected when deleting every edge of any t colors
leaves it connected.  All queries here enumerate color subsets as bitmasks in
a fixed order (size ascending, lexicographic within a size) and hand each
batch to the connectivity kernel, so answers and separators are
deterministic and identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import networkx as nx

from colornet import kernel
from colornet.graph import ColoredEdgeGraph, color_classes

__all__ = [
    "MAX_COLORS",
    "ColorSeparator",
    "ResilienceReport",
    "connected_after_removal",
    "is_color_connected",
    "is_color_connected_by_unions",
    "is_pair_color_connected",
    "min_color_separator",
    "resilience",
    "subset_masks",
]

MAX_COLORS = 63

# Masks per kernel call; large enough to amortize call overhead.
_CHUNK = 4096


@dataclass(frozen=True)
class ColorSeparator:
    """Colors whose removal disconnects ``scope``.

    ``scope`` is ``None`` for the whole graph, else the node pair ``(a, b)``.
    ``side`` is the component (of node 0, or of ``a``) left after removal; it
    and ``other`` form the witness bipartition.
    """

    colors: tuple[int, ...]
    scope: tuple[int, int] | None
    side: frozenset[int]
    other: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class ResilienceReport:
    max_t: int
    certificate: ColorSeparator | None


def _check_palette(g: ColoredEdgeGraph) -> None:
    if g.m > MAX_COLORS:
        raise ValueError(f"palette of {g.m} colors exceeds the supported {MAX_COLORS}")


def _check_threshold(g: ColoredEdgeGraph, t: int) -> None:
    if not 0 <= t <= g.m:
        raise ValueError(f"threshold t={t} outside [0, {g.m}]")


def _check_pair(g: ColoredEdgeGraph, a: int, b: int) -> None:
    if a == b:
        raise ValueError("pair endpoints must be distinct")
    for x in (a, b):
        if not 0 <= x < g.n:
            raise ValueError(f"node {x} outside [0, {g.n})")


def _mask(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << c
    return mask


def subset_masks(m: int, size: int) -> Iterator[int]:
    """Bitmasks of all ``size``-subsets of ``range(m)`` in lexicographic order."""
    for combo in combinations(range(m), size):
        yield _mask(combo)


def _first_cut(
    g: ColoredEdgeGraph,
    masks: Iterable[int],
    a: int = -1,
    b: int = -1,
    workers: int = 1,
) -> int | None:
    """Mask (not index) of the first entry of ``masks`` that cuts the scope."""
    us, vs, cs = kernel.pack_edges(*g.edge_arrays())
    chunks = _chunked(masks)
    if workers <= 1:
        for chunk in chunks:
            k = kernel.first_cut(g.n, us, vs, cs, chunk, a, b)
            if k >= 0:
                return chunk[k]
        return None
    chunk_list = list(chunks)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        hits = list(
            pool.map(lambda ch: kernel.first_cut(g.n, us, vs, cs, ch, a, b), chunk_list)
        )
    for chunk, k in zip(chunk_list, hits):
        if k >= 0:
            return chunk[k]
    return None


def _chunked(masks: Iterable[int]) -> Iterator:
    buf: list[int] = []
    for mask in masks:
        buf.append(mask)
        if len(buf) == _CHUNK:
            yield kernel.pack_masks(buf)
            buf = []
    if buf:
        yield kernel.pack_masks(buf)


def connected_after_removal(
    g: ColoredEdgeGraph, removed: Iterable[int], pair: tuple[int, int] | None = None
) -> bool:
    """Whether the graph (or ``pair``) stays connected without ``removed`` colors."""
    _check_palette(g)
    removed = set(removed)
    for c in removed:
        if not 0 <= c < g.m:
            raise ValueError(f"color {c} outside [0, {g.m})")
    a, b = (-1, -1) if pair is None else pair
    if pair is not None:
        _check_pair(g, a, b)
    return _first_cut(g, [_mask(removed)], a, b) is None


def is_color_connected(g: ColoredEdgeGraph, t: int, workers: int = 1) -> bool:
    """True iff removing any ``t`` colors leaves ``g`` connected."""
    _check_palette(g)
    _check_threshold(g, t)
    return _first_cut(g, subset_masks(g.m, t), workers=workers) is None


def is_color_connected_by_unions(g: ColoredEdgeGraph, t: int) -> bool:
    """The same decision via unions of ``m - t`` color classes.

    Independent of the kernel: each union is built as a networkx graph.
    """
    _check_threshold(g, t)
    classes = color_classes(g)
    for kept in combinations(range(g.m), g.m - t):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        for c in kept:
            h.add_edges_from((e.u, e.v) for e in classes[c])
        if not nx.is_connected(h):
            return False
    return True


def is_pair_color_connected(
    g: ColoredEdgeGraph, a: int, b: int, t: int, workers: int = 1
) -> bool:
    """True iff ``a`` and ``b`` stay connected after removing any ``t`` colors."""
    _check_palette(g)
    _check_pair(g, a, b)
    _check_threshold(g, t)
    return _first_cut(g, subset_masks(g.m, t), a, b, workers=workers) is None


def _component(g: ColoredEdgeGraph, removed_mask: int, start: int) -> frozenset[int]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for e in g.edges:
        if not (removed_mask >> e.color) & 1:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def min_color_separator(
    g: ColoredEdgeGraph,
    pair: tuple[int, int] | None = None,
    workers: int = 1,
    max_size: int | None = None,
) -> ColorSeparator | None:
    """Smallest color set disconnecting the graph (or ``pair``), or ``None``.

    Ties are broken by the lexicographically first color tuple.  ``None`` is
    returned only when no subset of size ``<= max_size`` (default ``m``) cuts
    the scope, which without a cap happens only for single-node graphs.
    """
    _check_palette(g)
    a, b = (-1, -1) if pair is None else pair
    if pair is not None:
        _check_pair(g, a, b)
    elif g.n <= 1:
        return None
    top = g.m if max_size is None else min(max_size, g.m)
    for size in range(top + 1):
        hit = _first_cut(g, subset_masks(g.m, size), a, b, workers=workers)
        if hit is not None:
            colors = tuple(c for c in range(g.m) if (hit >> c) & 1)
            side = _component(g, hit, 0 if pair is None else a)
            return ColorSeparator(
                colors, pair, side, frozenset(range(g.n)) - side
            )
    return None


def resilience(g: ColoredEdgeGraph, workers: int = 1) -> ResilienceReport:
    """Largest ``t`` for which ``g`` is (t+1)-color connected, with certificate.

    ``max_t`` is -1 for a disconnected graph and ``m`` when nothing can
    disconnect it (single node).
    """
    sep = min_color_separator(g, workers=workers)
    if sep is None:
        return ResilienceReport(g.m, None)
    return ResilienceReport(sep.size - 1, sep)
