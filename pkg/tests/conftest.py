from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

FIXED_TIME = "2026-08-18T12:00:00Z"
os.environ["CANOE_FIXED_TIME"] = FIXED_TIME

settings.register_profile(
    "canoe",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("canoe")

from canoe.argcore import (
    Argument,
    ArgumentGraph,
    CareOption,
    OptionCategory,
    PatientCase,
    Polarity,
    Relation,
    Role,
    Stance,
)
from canoe.canonical import read_json, round9
from canoe.pipeline import load_corpus

ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sample_root() -> Path:
    import canoe

    return Path(canoe.__file__).parent / "sampledata"


@pytest.fixture(scope="session")
def sample_case(sample_root) -> PatientCase:
    return PatientCase.from_doc(read_json(sample_root / "case.json"))


@pytest.fixture(scope="session")
def sample_corpus(sample_root):
    return load_corpus(sample_root / "corpus")


def build_graph(
    taus: dict[str, float],
    relations: list[tuple[str, str, str, float]] = (),
    stances: dict[str, str] | None = None,
    options: list[str] = ("opt-a",),
) -> ArgumentGraph:
    """Tiny-graph helper: every argument targets the first option unless
    its id appears in `stances` as "<stance>:<option_id>"."""
    graph = ArgumentGraph()
    for oid in options:
        graph = graph.with_option(CareOption(oid, oid, "", OptionCategory.COORDINATION))
    for aid, tau in taus.items():
        stance, option_id = Stance.SUPPORT, options[0]
        if stances and aid in stances:
            stance_name, _, opt = stances[aid].partition(":")
            stance = Stance(stance_name)
            option_id = opt or options[0]
        graph = graph.with_argument(
            Argument(aid, f"argument {aid}", stance, Role.REGISTERED_NURSE,
                     option_id, tau=tau)
        )
    for source, target, polarity, weight in relations:
        graph = graph.with_relation(Relation(source, target, Polarity(polarity), weight))
    return graph


@st.composite
def small_graphs(draw, max_nodes: int = 6, max_edges: int = 10,
                 acyclic: bool = False, max_weight: float = 0.9):
    """Hypothesis strategy over valid graphs; ids are zero-padded."""
    n = draw(st.integers(min_value=1, max_value=max_nodes))
    taus = draw(
        st.lists(
            st.floats(min_value=0.0, max_value=1.0, allow_nan=False).map(round9),
            min_size=n, max_size=n,
        )
    )
    node_ids = [f"a{i:03d}" for i in range(n)]
    stance_picks = draw(st.lists(st.booleans(), min_size=n, max_size=n))

    graph = ArgumentGraph().with_option(
        CareOption("opt-a", "option a", "", OptionCategory.COORDINATION)
    )
    for aid, tau, is_support in zip(node_ids, taus, stance_picks):
        graph = graph.with_argument(
            Argument(aid, f"argument {aid}",
                     Stance.SUPPORT if is_support else Stance.CHALLENGE,
                     Role.REGISTERED_NURSE, "opt-a", tau=tau)
        )

    n_edges = draw(st.integers(min_value=0, max_value=max_edges))
    seen: set[tuple[int, int, bool]] = set()
    for _ in range(n_edges):
        if acyclic:
            if n < 2:
                break
            i = draw(st.integers(min_value=0, max_value=n - 2))
            j = draw(st.integers(min_value=i + 1, max_value=n - 1))
        else:
            i = draw(st.integers(min_value=0, max_value=n - 1))
            j = draw(st.integers(min_value=0, max_value=n - 1))
            if i == j:
                continue
        supports = draw(st.booleans())
        if (i, j, supports) in seen:
            continue
        seen.add((i, j, supports))
        weight = draw(
            st.floats(min_value=0.0, max_value=max_weight, allow_nan=False).map(round9)
        )
        graph = graph.with_relation(
            Relation(node_ids[i], node_ids[j],
                     Polarity.SUPPORT if supports else Polarity.ATTACK, weight)
        )
    return graph
