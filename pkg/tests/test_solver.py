"""Fixed-point solver: hand-checked values, ordering invariance, oracle
agreement, and honest failure on genuine non-convergence."""

import random

import pytest
from hypothesis import given, settings

from canoe.argcore import graph_to_doc
from canoe.errors import NonConvergence, OutOfRange, UnknownArgument
from canoe.semantics import SolverConfig, influence, solve

from conftest import build_graph, small_graphs
from graphgen import random_graph
from oracles import topo_degrees

TIGHT = SolverConfig(tolerance=1e-9)


def test_single_supporter_fixture():
    graph = build_graph({"y": 0.5, "x": 0.4}, [("y", "x", "support", 0.5)])
    got = solve(graph, TIGHT).degrees
    assert got["y"] == pytest.approx(0.5, abs=1e-9)
    assert got["x"] == pytest.approx(0.65, abs=1e-6)


def test_single_attacker_fixture():
    graph = build_graph({"y": 0.5, "x": 0.4}, [("y", "x", "attack", 0.5)])
    assert solve(graph, TIGHT).degrees["x"] == pytest.approx(0.15, abs=1e-6)


def test_mutual_support_cycle_fixture():
    graph = build_graph(
        {"a": 0.2, "b": 0.2},
        [("a", "b", "support", 0.5), ("b", "a", "support", 0.5)],
    )
    got = solve(graph, TIGHT).degrees
    assert got["a"] == pytest.approx(0.4, abs=1e-6)
    assert got["b"] == pytest.approx(0.4, abs=1e-6)


def test_isolated_node_keeps_tau():
    graph = build_graph({"a": 0.37})
    result = solve(graph)
    assert result.degrees["a"] == 0.37
    assert result.iterations_used >= 1


def test_empty_graph():
    assert solve(build_graph({})).degrees == {}


def test_influence_signs_and_lookup():
    graph = build_graph(
        {"s": 0.8, "t": 0.6, "x": 0.5},
        [("s", "x", "support", 0.5), ("t", "x", "attack", 0.25)],
    )
    degrees = {aid: graph.arguments[aid].tau for aid in graph.argument_ids()}
    assert influence("x", graph, degrees) == pytest.approx(0.5 * 0.8 - 0.25 * 0.6)
    with pytest.raises(UnknownArgument):
        influence("ghost", graph, degrees)


def test_undamped_oscillator_raises_with_partial():
    # two mutual full-weight attackers flip forever when damping is off
    graph = build_graph(
        {"a": 1.0, "b": 1.0},
        [("a", "b", "attack", 1.0), ("b", "a", "attack", 1.0)],
    )
    cfg = SolverConfig(damping=1.0, max_iterations=50)
    with pytest.raises(NonConvergence) as excinfo:
        solve(graph, cfg)
    err = excinfo.value
    assert err.iterations == 50
    assert err.residual > 0
    assert err.partial is not None
    assert set(err.partial.degrees) == {"a", "b"}
    # the same instance converges once damping is restored
    result = solve(graph, SolverConfig(damping=0.5))
    assert result.degrees["a"] == pytest.approx(0.5, abs=1e-5)


def test_config_validation():
    with pytest.raises(OutOfRange):
        SolverConfig(damping=0.0)
    with pytest.raises(OutOfRange):
        SolverConfig(tolerance=0.0)
    with pytest.raises(OutOfRange):
        SolverConfig(squash="tanh")
    with pytest.raises(OutOfRange):
        SolverConfig(max_iterations=0)
    with pytest.raises(OutOfRange):
        SolverConfig(logistic_k=-1.0)


def test_logistic_squash_midpoint():
    # no relations: f = sigma(tau); tau=0.5 sits exactly at the midpoint
    graph = build_graph({"a": 0.5})
    assert solve(graph, SolverConfig(squash="logistic")).degrees["a"] == 0.5


def test_clip_saturates_at_bounds():
    graph = build_graph(
        {"s": 1.0, "x": 0.9, "t": 1.0, "y": 0.1},
        [("s", "x", "support", 0.9), ("t", "y", "attack", 0.9)],
    )
    # undamped on a DAG settles in one pass, so the clip is hit exactly
    got = solve(graph, SolverConfig(damping=1.0, tolerance=1e-9)).degrees
    assert got["x"] == 1.0
    assert got["y"] == 0.0


@given(small_graphs(acyclic=True))
def test_degrees_stay_in_unit_interval(graph):
    result = solve(graph, SolverConfig(tolerance=1e-7))
    for value in result.degrees.values():
        assert 0.0 <= value <= 1.0


@given(small_graphs(acyclic=True, max_weight=0.85))
@settings(max_examples=60)
def test_agrees_with_parents_first_oracle(graph):
    got = solve(graph, SolverConfig(tolerance=1e-12)).degrees
    want = topo_degrees(graph_to_doc(graph))
    for aid, value in want.items():
        assert got[aid] == pytest.approx(value, abs=1e-9)


def test_result_independent_of_insertion_order():
    rng = random.Random(7)
    for _ in range(20):
        graph = random_graph(rng, max_nodes=8, max_edges=12, acyclic=False,
                             cap_incoming=0.9)
        shuffled_doc = graph_to_doc(graph)
        rng.shuffle(shuffled_doc["arguments"])
        rng.shuffle(shuffled_doc["relations"])
        from canoe.argcore import doc_to_graph

        reordered = doc_to_graph(shuffled_doc)
        assert solve(graph, TIGHT).degrees == solve(reordered, TIGHT).degrees


def test_reports_iterations_and_residual():
    graph = build_graph(
        {"a": 0.2, "b": 0.2},
        [("a", "b", "support", 0.5), ("b", "a", "support", 0.5)],
    )
    result = solve(graph)
    assert result.iterations_used > 1
    assert 0.0 <= result.residual < 1e-6
