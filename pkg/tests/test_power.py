import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, seeded_graphs
from oracles import power_edges, wedge_closure
from rulingset.generators import complete, cycle, path
from rulingset.graph import GraphError, build_graph, connected_components
from rulingset.power import (
    PowerMode,
    expand_round,
    power_graph,
    reduce_k_graph,
    ruled_neighborhoods,
)

MODES = [PowerMode.BFS, PowerMode.ITERATIVE]


@pytest.mark.parametrize("mode", MODES)
def test_k1_is_identity(mode):
    g = cycle(7)
    assert power_graph(g, 1, mode) == g


@pytest.mark.parametrize("mode", MODES)
def test_path4_squared(mode):
    assert power_graph(path(4), 2, mode).edges() == {(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)}


@pytest.mark.parametrize("mode", MODES)
def test_c5_squared_is_k5(mode):
    assert power_graph(cycle(5), 2, mode) == complete(5)


def test_complete_graph_fixpoint_after_one_round():
    g, deltas = reduce_k_graph(complete(6), 5)
    assert g == complete(6)
    assert len(deltas) == 1 and not deltas[0]


def test_k_zero_rejected():
    with pytest.raises(GraphError):
        power_graph(path(3), 0)


def test_mode_accepts_strings():
    assert power_graph(path(5), 3, "iterative") == power_graph(path(5), 3, "bfs")


def test_expand_round_examples():
    p = path(4)
    g, delta = expand_round(p, p)
    assert delta.added_edges == {(0, 2), (1, 3)}
    assert g.edges() == wedge_closure(4, p.edges(), p.edges())
    assert not expand_round(complete(4), complete(4))[1]
    e = build_graph(3, [])
    assert not expand_round(e, e)[1]
    with pytest.raises(GraphError):
        expand_round(path(3), path(4))


def test_expand_round_matches_wedge_oracle():
    for n, edges, g in seeded_graphs(80, 15, seed=21):
        cur = power_graph(g, 2)
        out, delta = expand_round(cur, g)
        expected = wedge_closure(n, cur.edges(), edges)
        assert out.edges() == expected
        assert delta.added_edges == expected - cur.edges()


def test_early_termination_on_disconnected_graph():
    # Two short paths: saturated after two rounds, never complete.
    g = build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    out, deltas = reduce_k_graph(g, 10)
    assert [bool(d) for d in deltas] == [True, False]
    assert out == power_graph(g, 10)


def test_rounds_add_one_hop_each():
    p = path(9)
    _, deltas = reduce_k_graph(p, 5)
    # Round i joins exactly the pairs at distance i + 1.
    assert [len(d) for d in deltas] == [7, 6, 5, 4]


def test_ruled_neighborhoods():
    assert ruled_neighborhoods(path(5), 0) == ({1}, {2})
    assert ruled_neighborhoods(complete(4), 0) == ({1, 2, 3}, set())
    assert ruled_neighborhoods(build_graph(2, []), 1) == (set(), set())


def test_power_matches_oracle_both_modes():
    for n, edges, g in seeded_graphs(120, 20, seed=22):
        for k in range(1, 7):
            expected = power_edges(n, edges, k)
            bfs = power_graph(g, k, PowerMode.BFS)
            it = power_graph(g, k, PowerMode.ITERATIVE)
            assert bfs.edges() == expected
            assert it == bfs


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12), st.integers(1, 5))
def test_monotone_in_k(g, k):
    assert power_graph(g, k).edges() <= power_graph(g, k + 1).edges()


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12), st.integers(1, 4), st.integers(1, 2))
def test_composition(g, a, b):
    assert power_graph(power_graph(g, a), b) == power_graph(g, a * b)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12), st.integers(1, 5))
def test_components_preserved(g, k):
    comps = {frozenset(c) for c in connected_components(g)}
    assert {frozenset(c) for c in connected_components(power_graph(g, k))} == comps


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=10))
def test_fixpoint_is_stable(g):
    cur = g
    while True:
        cur, delta = expand_round(cur, g)
        if not delta:
            break
    for _ in range(3):
        again, delta = expand_round(cur, g)
        assert not delta and again == cur
