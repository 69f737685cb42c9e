from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colornet.connectivity import (
    connected_after_removal,
    is_color_connected,
    is_color_connected_by_unions,
    is_pair_color_connected,
    min_color_separator,
    resilience,
)
from colornet.constructions import G1, G2, circle_graph
from colornet.graph import new_graph
from colornet.reduction import PlainGraph, vc_to_ceconnect

K3 = PlainGraph(3, ((0, 1), (1, 2), (0, 2)))


def nx_survives(g, removed, pair=None):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((e.u, e.v) for e in g.edges if e.color not in removed)
    if pair is None:
        return nx.is_connected(h)
    return nx.has_path(h, *pair)


def nx_min_separator_size(g, pair=None):
    for size in range(g.m + 1):
        for combo in combinations(range(g.m), size):
            if not nx_survives(g, set(combo), pair):
                return size
    return None


def test_connected_after_removal_examples(path2):
    assert connected_after_removal(G1, [])
    assert connected_after_removal(circle_graph(3), [0])
    assert not connected_after_removal(path2, [0])


def test_connected_after_removal_rejects_bad_color():
    with pytest.raises(ValueError):
        connected_after_removal(G1, [4])


def test_single_node_is_connected():
    assert connected_after_removal(new_graph(1, 1, []), [0])


def test_is_color_connected_examples(path2):
    assert is_color_connected(G1, 2)
    assert is_color_connected(G2, 2)
    assert not is_color_connected(path2, 1)


def test_threshold_range():
    with pytest.raises(ValueError):
        is_color_connected(G1, 5)
    with pytest.raises(ValueError):
        is_color_connected(G1, -1)


def test_pair_connectivity_on_k3_reduction():
    inst = vc_to_ceconnect(K3, 2)
    assert not is_pair_color_connected(inst.graph, 0, 1, 2)
    assert is_pair_color_connected(inst.graph, 0, 1, 1)


def test_pair_connectivity_t0_on_connected_graph():
    assert all(is_pair_color_connected(G2, a, b, 0) for a, b in combinations(range(7), 2))


def test_pair_errors():
    with pytest.raises(ValueError):
        is_pair_color_connected(G1, 2, 2, 1)
    with pytest.raises(ValueError):
        is_pair_color_connected(G1, 0, 9, 1)


def test_min_separator_examples(path2):
    sep = min_color_separator(path2)
    assert sep.colors == (0,)
    assert sep.side == {0} and sep.other == {1, 2}
    g1_sep = min_color_separator(G1)
    assert g1_sep.size == 3 == nx_min_separator_size(G1)
    disconnected = new_graph(4, 2, [(0, 1, 0), (2, 3, 1)])
    assert min_color_separator(disconnected).colors == ()


def test_min_separator_is_lexicographically_first():
    # G1: first size-3 subset in lex order that cuts
    expected = next(
        combo for combo in combinations(range(4), 3) if not nx_survives(G1, set(combo))
    )
    assert min_color_separator(G1).colors == expected


def test_min_separator_absent_for_single_node():
    assert min_color_separator(new_graph(1, 2, [])) is None


def test_resilience_examples(path2):
    assert resilience(G1).max_t == 2
    assert resilience(path2).max_t == 0
    edgeless = resilience(new_graph(2, 1, []))
    assert edgeless.max_t == -1 and edgeless.certificate.colors == ()
    assert resilience(new_graph(1, 3, [])).max_t == 3


@st.composite
def graphs(draw, max_n=8, max_m=5):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return new_graph(n, m, [(u, v, draw(st.integers(0, m - 1))) for u, v in chosen])


@settings(max_examples=150)
@given(graphs())
def test_two_formulations_agree(g):
    for t in range(g.m + 1):
        assert is_color_connected(g, t) == is_color_connected_by_unions(g, t)


@settings(max_examples=150)
@given(graphs())
def test_monotone_in_t(g):
    verdicts = [is_color_connected(g, t) for t in range(g.m + 1)]
    assert verdicts == sorted(verdicts, reverse=True)


@settings(max_examples=150)
@given(graphs())
def test_separator_duality_and_witness(g):
    sep = min_color_separator(g)
    if g.n <= 1:
        assert sep is None
        return
    assert sep.size == nx_min_separator_size(g)
    for t in range(g.m + 1):
        assert is_color_connected(g, t) == (sep.size > t)
    assert not connected_after_removal(g, sep.colors)
    assert sep.side and sep.other and sep.side | sep.other == set(range(g.n))
    crossing = [
        e for e in g.edges
        if e.color not in sep.colors and ((e.u in sep.side) != (e.v in sep.side))
    ]
    assert crossing == []
    rep = resilience(g)
    assert rep.max_t == sep.size - 1
    if nx_survives(g, set()):
        assert rep.max_t <= g.m - 1


@settings(max_examples=100)
@given(graphs(max_n=6), st.data())
def test_pair_separator_and_whole_graph(g, data):
    if g.n < 2:
        return
    a = data.draw(st.integers(0, g.n - 1))
    b = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != a))
    sep = min_color_separator(g, (a, b))
    assert sep.size == nx_min_separator_size(g, (a, b))
    assert a in sep.side and b in sep.other
    assert not connected_after_removal(g, sep.colors, (a, b))
    for t in range(g.m + 1):
        assert is_pair_color_connected(g, a, b, t) == (sep.size > t)
        whole = is_color_connected(g, t)
        every_pair = all(
            is_pair_color_connected(g, x, y, t) for x, y in combinations(range(g.n), 2)
        )
        assert whole == every_pair


@settings(max_examples=60)
@given(graphs(max_n=7, max_m=6), st.sampled_from([2, 3, 8]))
def test_worker_count_does_not_change_answers(g, workers):
    assert min_color_separator(g, workers=workers) == min_color_separator(g)
    for t in range(g.m + 1):
        assert is_color_connected(g, t, workers=workers) == is_color_connected(g, t)


def test_small_chunks_split_across_workers(monkeypatch, rng):
    from conftest import random_graph

    from colornet import connectivity

    cases = [random_graph(rng, rng.randint(3, 9), rng.randint(2, 7), 0.5) for _ in range(80)]
    sequential = [(min_color_separator(g), [is_color_connected(g, t) for t in range(g.m + 1)]) for g in cases]
    monkeypatch.setattr(connectivity, "_CHUNK", 3)
    for workers in (1, 4):
        parallel = [
            (min_color_separator(g, workers=workers), [is_color_connected(g, t, workers=workers) for t in range(g.m + 1)])
            for g in cases
        ]
        assert parallel == sequential
