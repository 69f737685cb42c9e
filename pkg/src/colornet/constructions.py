"""Explicit minimum-edge designs of color-connected graphs.

Every public builder returns a graph that has been re-verified by the exact
checker in :mod:`colornet.connectivity`; a construction that fails its own
check raises :class:`ConstructionError` instead of returning.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Sequence

from colornet import kernel
from colornet.bounds import GuardExceeded, min_lambda, proven_family
from colornet.connectivity import is_color_connected, subset_masks
from colornet.graph import ColoredEdgeGraph, new_graph

__all__ = [
    "ConstructionError",
    "G1",
    "G2",
    "G51",
    "G52",
    "build_disjoint_spanning",
    "circle_graph",
    "two_circle_graph",
    "petal_graph",
    "build_t1",
    "build_m4_t2",
    "build_m5_t3",
    "glue_at_node",
    "add_node",
    "pad_edges",
    "gadget_search",
    "design",
]

log = logging.getLogger(__name__)


class ConstructionError(ValueError):
    """Parameters outside a builder's domain, or a failed self-check."""


def _verified(g: ColoredEdgeGraph, t: int, what: str) -> ColoredEdgeGraph:
    if not is_color_connected(g, t):
        raise ConstructionError(f"{what} failed its (t+1)-color connectivity check at t={t}")
    return g


def _one_based(n: int, m: int, edges: Sequence[tuple[int, int, int]]) -> ColoredEdgeGraph:
    return new_graph(n, m, [(u - 1, v - 1, c - 1) for u, v, c in edges])


# Five nodes, four colors, eight edges; survives any two colors failing.
G1 = _one_based(
    5,
    4,
    [(1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 5, 3), (5, 1, 2), (1, 3, 3), (1, 4, 4), (2, 5, 4)],
)

# Seven nodes, four colors, twelve edges; survives any two colors failing.
G2 = _one_based(
    7,
    4,
    [
        (1, 2, 1), (2, 3, 2), (4, 5, 3), (5, 1, 2), (1, 3, 3), (1, 4, 4),
        (2, 5, 4), (3, 6, 1), (6, 7, 3), (7, 4, 1), (4, 6, 4), (3, 7, 2),
    ],
)  # fmt: skip

# First hits of gadget_search(5, 5, 3, 10) and gadget_search(7, 5, 3, 15);
# tests regenerate both.  Any two color classes form a spanning tree.
G51 = new_graph(
    5,
    5,
    [
        (0, 1, 0), (0, 2, 1), (0, 3, 2), (0, 4, 3), (1, 2, 2),
        (1, 3, 3), (1, 4, 4), (2, 3, 4), (2, 4, 0), (3, 4, 1),
    ],
)  # fmt: skip
G52 = new_graph(
    7,
    5,
    [
        (0, 1, 0), (0, 2, 1), (0, 3, 2), (0, 4, 1), (0, 5, 2),
        (0, 6, 3), (1, 2, 3), (1, 3, 4), (1, 4, 2), (2, 3, 0),
        (2, 5, 4), (3, 6, 1), (4, 5, 3), (4, 6, 4), (5, 6, 0),
    ],
)  # fmt: skip


# ---------------------------------------------------------------------------
# m = t + 1: edge-disjoint spanning trees


def build_disjoint_spanning(n: int, m: int) -> ColoredEdgeGraph:
    """``m`` edge-disjoint spanning trees on ``n >= 2m`` nodes, one per color.

    Grows the single edge on two nodes by the two inductive steps: two new
    nodes and one new color (from ``(2m0, m0)`` to ``(2m0+2, m0+1)``), then
    one new node at a time.  The result has ``m(n-1)`` edges and survives any
    ``m - 1`` colors failing.
    """
    if m < 1 or n < 2 * m:
        raise ConstructionError(f"disjoint spanning trees need m >= 1 and n >= 2m, got n={n}, m={m}")
    classes: list[set[tuple[int, int]]] = [{(0, 1)}]
    nodes = 2
    while len(classes) < m:
        classes = _grow_color(classes, nodes)
        nodes += 2
    while nodes < n:
        # new node joins color c at the c-th smallest existing node
        for c, cls in enumerate(classes):
            cls.add((c, nodes))
        nodes += 1
    edges = [(u, v, c) for c, cls in enumerate(classes) for u, v in cls]
    return _verified(new_graph(n, m, edges), m - 1, "disjoint spanning trees")


def _grow_color(classes: list[set[tuple[int, int]]], n0: int) -> list[set[tuple[int, int]]]:
    m0 = len(classes)
    assert n0 >= 2 * m0, "two-node step needs n0 >= 2 m0 free endpoints"
    u, v = n0, n0 + 1
    out = [set(cls) for cls in classes]
    v1, v2 = min(classes[0])
    out[0].discard((v1, v2))
    out[0] |= {_e(v1, u), _e(u, v), _e(v, v2)}
    new = {_e(v, v1), _e(v1, v2), _e(v2, u)}
    used = {v1, v2}
    for i in range(1, m0):
        a, b = sorted(x for x in range(n0) if x not in used)[:2]
        out[i] |= {_e(u, a), _e(v, b)}
        new |= {_e(v, a), _e(u, b)}
        used |= {a, b}
    out.append(new)
    return out


def _e(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


# ---------------------------------------------------------------------------
# t = 1


def circle_graph(m: int) -> ColoredEdgeGraph:
    """Cycle on ``m >= 3`` nodes whose edges carry ``m`` distinct colors."""
    if m < 3:
        raise ConstructionError(f"circle graph needs m >= 3, got {m}")
    edges = [(i, (i + 1) % m, i) for i in range(m)]
    return _verified(new_graph(m, m, edges), 1, "circle graph")


def two_circle_graph(n: int, m: int) -> ColoredEdgeGraph:
    """Colored ``m``-cycle plus a second path from node ``m-1`` back to node 0.

    Valid for ``m >= 3`` and ``m < n <= 2m - 2``; has ``n + 1`` edges.
    """
    if m < 3 or not m < n <= 2 * m - 2:
        raise ConstructionError(f"two-circle graph needs m >= 3 and m < n <= 2m-2, got n={n}, m={m}")
    # 1-based node v_i is i - 1, color c_i is i - 1
    edges = [(i, i + 1, i) for i in range(1, m)]
    edges.append((m, 1, m))
    edges += [(m + i - 1, m + i, i) for i in range(1, n - m + 1)]
    edges.append((n, 1, n - m + 1))
    return _verified(_one_based(n, m, edges), 1, "two-circle graph")


def petal_graph(k: int, m: int, j: int = 1) -> ColoredEdgeGraph:
    """``k`` colored ``m``-cycles through hub node 0, plus an optional detour.

    With ``j == 1`` this has ``(m-1)k + 1`` nodes and ``mk`` edges.  For
    ``2 <= j <= m-1`` a path of ``j`` edges through ``j - 1`` new nodes joins
    node ``m-1`` back to the hub, its edges colored 0, 1, ..., ``j-1``.
    """
    if m < 3 or k < 1 or not 1 <= j <= m - 1:
        raise ConstructionError(f"petal graph needs m >= 3, k >= 1, 1 <= j < m; got k={k}, m={m}, j={j}")
    base = (m - 1) * k
    edges = []
    for i in range(k):
        edges.append((0, (m - 1) * i + 1, 0))
        for c in range(2, m):
            edges.append(((m - 1) * i + c - 1, (m - 1) * i + c, c - 1))
        edges.append(((m - 1) * (i + 1), 0, m - 1))
    if j >= 2:
        path = [m - 1] + [base + i for i in range(1, j)] + [0]
        edges += [(path[p], path[p + 1], p) for p in range(j)]
    return new_graph(base + j, m, edges)


def build_t1(n: int, m: int) -> ColoredEdgeGraph:
    """Fewest-edge graph on ``n`` nodes and ``m`` colors surviving one color failure."""
    if m == 2:
        return build_disjoint_spanning(n, 2)
    if m < 2 or n < m:
        raise ConstructionError(f"t=1 designs need m >= 3 and n >= m (or m = 2), got n={n}, m={m}")
    if n == m:
        return circle_graph(m)
    k, j = divmod(n - 1, m - 1)
    j += 1
    g = petal_graph(k, m, j)
    if m < n <= 2 * m - 2 and n + 1 < g.num_edges:
        g = two_circle_graph(n, m)
    return _verified(g, 1, "t=1 design")


# ---------------------------------------------------------------------------
# gadget gluing for m = 4, t = 2 and m = 5, t = 3


def glue_at_node(graphs: Sequence[ColoredEdgeGraph], anchors: Sequence[int]) -> ColoredEdgeGraph:
    """Disjoint union of ``graphs`` with all anchor nodes identified.

    The first graph keeps its numbering; the other graphs' non-anchor nodes
    follow in order.  Colors are shared positionally.
    """
    if not graphs or len(graphs) != len(anchors):
        raise ValueError("need one anchor per graph and at least one graph")
    m = graphs[0].m
    if any(g.m != m for g in graphs):
        raise ValueError("all glued graphs must share one palette size")
    for g, a in zip(graphs, anchors):
        if not 0 <= a < g.n:
            raise ValueError(f"anchor {a} outside [0, {g.n})")
    hub = anchors[0]
    edges = list(graphs[0].triples())
    offset = graphs[0].n
    for g, a in zip(graphs[1:], anchors[1:]):
        relabel = {}
        for x in range(g.n):
            if x == a:
                relabel[x] = hub
            else:
                relabel[x] = offset
                offset += 1
        edges += [(relabel[u], relabel[v], c) for u, v, c in g.triples()]
    return new_graph(offset, m, edges)


def add_node(g: ColoredEdgeGraph, targets: Sequence[int], colors: Sequence[int]) -> ColoredEdgeGraph:
    """Append one node joined to each of ``targets`` by an edge of the matching color."""
    x = g.n
    return new_graph(g.n + 1, g.m, g.triples() + [(x, v, c) for v, c in zip(targets, colors)])


def _glued_family(n: int, small: ColoredEdgeGraph, large: ColoredEdgeGraph, t: int) -> ColoredEdgeGraph:
    if n < 5:
        raise ConstructionError(f"n={n} is infeasible for m={small.m}, t={t}")
    odd = n if n % 2 else n - 1
    k = (odd - 1) // 2
    if k == 2:
        g = small
    elif k == 3:
        g = large
    elif k % 2 == 0:
        g = glue_at_node([small] * (k // 2), [0] * (k // 2))
    else:
        r = (k - 1) // 2
        g = glue_at_node([small] * (r - 1) + [large], [0] * r)
    if n % 2 == 0:
        g = add_node(g, range(t + 1), range(t + 1))
    return g


def build_m4_t2(n: int) -> ColoredEdgeGraph:
    """Fewest-edge 4-color graph on ``n >= 5`` nodes surviving two color failures.

    ``4k`` edges for ``n = 2k+1`` and ``4k+3`` for ``n = 2k+2``.
    """
    return _verified(_glued_family(n, G1, G2, 2), 2, "m=4, t=2 design")


def build_m5_t3(n: int) -> ColoredEdgeGraph:
    """Fewest-edge 5-color graph on ``n >= 5`` nodes surviving three color failures.

    ``5k`` edges for ``n = 2k+1`` and ``5k+4`` for ``n = 2k+2``.
    """
    return _verified(_glued_family(n, G51, G52, 3), 3, "m=5, t=3 design")


# ---------------------------------------------------------------------------
# exhaustive search


GADGET_PAIR_LIMIT = 28  # K_8


def gadget_search(
    n: int, m: int, t: int, lam: int, max_steps: int | None = 50_000_000
) -> ColoredEdgeGraph | None:
    """First ``lam``-edge graph on ``n`` nodes and ``m`` colors that survives ``t`` failures.

    Candidates are ordered by edge subset of K_n (lexicographic combinations
    of the sorted node pairs), then by coloring in first-use order (the color
    string read along the subset is lexicographically least among its
    renamings).  Branches are cut only when no completion can pass the
    checker, so the first hit is the same as for plain enumeration.
    ``max_steps`` bounds the number of search nodes visited.
    """
    pairs = list(combinations(range(n), 2))
    if len(pairs) > GADGET_PAIR_LIMIT:
        raise GuardExceeded(f"gadget search limited to n <= 8, got n={n}")
    if not 0 <= t <= m or lam < 0 or lam > len(pairs):
        return None
    masks = kernel.pack_masks(list(subset_masks(m, t)))
    steps = [0]
    for subset in combinations(pairs, lam):
        if n >= 2 and any(d <= t for d in _degrees(n, subset)):
            continue
        hit = _color_subset(n, m, t, subset, masks, steps, max_steps)
        if hit is not None:
            return _verified(new_graph(n, m, [(u, v, c) for (u, v), c in zip(subset, hit)]), t, "gadget")
    return None


def _degrees(n: int, subset: Sequence[tuple[int, int]]) -> list[int]:
    deg = [0] * n
    for u, v in subset:
        deg[u] += 1
        deg[v] += 1
    return deg


def _color_subset(n, m, t, subset, masks, steps, max_steps):
    lam = len(subset)
    slack = lam - (n - 1)  # the t largest classes may hold at most this many edges
    us, vs, cs = kernel.pack_edges([u for u, _ in subset], [v for _, v in subset], [0] * lam)
    # last position at which each node is touched; its colors are final there
    closes: list[list[int]] = [[] for _ in range(lam)]
    last = {}
    for i, (u, v) in enumerate(subset):
        last[u] = i
        last[v] = i
    for node, i in last.items():
        closes[i].append(node)
    sizes = [0] * m
    node_colors: list[list[int]] = [[0] * m for _ in range(n)]
    colors = [0] * lam

    def top_t() -> int:
        return sum(sorted(sizes, reverse=True)[:t]) if t else 0

    def rec(i: int, used: int) -> bool:
        steps[0] += 1
        if max_steps is not None and steps[0] > max_steps:
            raise GuardExceeded(f"gadget search exceeded {max_steps} steps")
        if i == lam:
            for p, c in enumerate(colors):
                cs[p] = c
            return kernel.first_cut(n, us, vs, cs, masks) < 0
        u, v = subset[i]
        for c in range(min(used + 1, m)):
            sizes[c] += 1
            if top_t() <= slack:
                node_colors[u][c] += 1
                node_colors[v][c] += 1
                colors[i] = c
                if all(
                    sum(1 for x in node_colors[w] if x) > t for w in closes[i]
                ) and rec(i + 1, max(used, c + 1)):
                    return True
                node_colors[u][c] -= 1
                node_colors[v][c] -= 1
            sizes[c] -= 1
        return False

    if rec(0, 0):
        return list(colors)
    return None


# ---------------------------------------------------------------------------
# padding and dispatch


def pad_edges(g: ColoredEdgeGraph, lam: int) -> ColoredEdgeGraph:
    """Add the lexicographically first missing node pairs, colored 0, until ``lam`` edges."""
    if lam < g.num_edges:
        raise ConstructionError(f"target {lam} is below the design's {g.num_edges} edges")
    present = {e.pair() for e in g.edges}
    extra = []
    for pair in combinations(range(g.n), 2):
        if g.num_edges + len(extra) == lam:
            break
        if pair not in present:
            extra.append((*pair, 0))
    if g.num_edges + len(extra) < lam:
        raise ConstructionError(f"K_{g.n} has fewer than {lam} edges")
    return new_graph(g.n, g.m, g.triples() + extra)


def design(n: int, m: int, t: int, lam: int | None = None) -> tuple[ColoredEdgeGraph, str]:
    """Build a minimum-edge design for ``(n, m, t)`` from a proven family.

    Returns the graph and the family name.  With ``lam`` the design is
    padded with extra edges up to that count.
    """
    family = proven_family(n, m, t)
    if family is None:
        raise ConstructionError(f"no explicit construction covers n={n}, m={m}, t={t}")
    if family == "disjoint-spanning":
        g = build_disjoint_spanning(n, m)
    elif family == "t1":
        g = build_t1(n, m)
    elif family == "m4-t2":
        g = build_m4_t2(n)
    else:
        g = build_m5_t3(n)
    best = min_lambda(n, m, t)
    if best is not None and g.num_edges != best:
        log.warning("%s design has %d edges, bound is %d", family, g.num_edges, best)
    if lam is not None:
        g = _verified(pad_edges(g, lam), t, "padded design")
    return g, family
