"""Debate orchestration: graph shape, id scheme, relation handling, linker."""

import pytest

from canoe.argcore import (
    ArgumentStatus,
    EvidenceDoc,
    OptionCategory,
    CareOption,
    PatientCase,
    Polarity,
    Role,
    SourceType,
    graph_hash,
    graph_to_doc,
)
from canoe.errors import MalformedResponse, ValidationError
from canoe.pipeline import (
    BackendResponse,
    DebateConfig,
    ProposedArgument,
    ProposedRelation,
    TeamRoster,
    build_query,
    run_debate,
    scripted_backend,
)


def make_case():
    return PatientCase(
        case_id="c-5",
        age=77,
        conditions=("copd",),
        medications=("m1", "m2"),
        falls_90d=1,
        flags=frozenset({"nutrition_risk"}),
        narrative="short of breath on stairs",
    )


def make_roster(*roles):
    roles = roles or (Role.REGISTERED_NURSE, Role.GENERAL_PRACTITIONER)
    return TeamRoster(roles=tuple(roles), triggers={r: "base:low" for r in roles})


def make_options(n=2):
    ids = ["opt-a", "opt-b", "opt-c"][:n]
    return [
        CareOption(option_id=oid, title=f"option {oid}", description="desc",
                   category=OptionCategory.COORDINATION)
        for oid in ids
    ]


def make_corpus():
    texts = {
        "doc-a": "breathing support for copd at home",
        "doc-b": "nutrition risk screening for older adults",
        "doc-c": "general coordination of community services",
    }
    return [
        EvidenceDoc(doc_id=doc_id, text=text, source_type=SourceType.GUIDELINE,
                    reliability=0.9)
        for doc_id, text in texts.items()
    ]


def test_one_round_shape_and_ids():
    graph = run_debate(make_case(), make_roster(), make_options(2), make_corpus())
    assert len(graph.arguments) == 2 * 2 * 2
    assert sorted(graph.arguments) == sorted(
        f"{role}-{oid}-{stance}-1"
        for role in ("registered_nurse", "general_practitioner")
        for oid in ("opt-a", "opt-b")
        for stance in ("support", "challenge")
    )
    for arg in graph.arguments.values():
        assert arg.status is ArgumentStatus.PENDING
        assert 0.0 <= arg.tau <= 1.0


def test_two_rounds_double_the_arguments_and_add_links():
    cfg = DebateConfig(rounds=2)
    graph = run_debate(make_case(), make_roster(Role.REGISTERED_NURSE),
                       make_options(1), make_corpus(), cfg)
    assert len(graph.arguments) == 4
    # the round-2 support argument allies with round 1's best support and
    # attacks round 1's best challenge
    triples = {r.triple for r in graph.relations}
    assert (
        "registered_nurse-opt-a-support-2",
        "registered_nurse-opt-a-support-1",
        "support",
    ) in triples
    assert (
        "registered_nurse-opt-a-support-2",
        "registered_nurse-opt-a-challenge-1",
        "attack",
    ) in triples


def test_debate_is_deterministic():
    args = (make_case(), make_roster(), make_options(2), make_corpus())
    cfg = DebateConfig(rounds=2, heuristic_linker=True)
    assert graph_hash(run_debate(*args, cfg)) == graph_hash(run_debate(*args, cfg))


def test_heuristic_linker_adds_weak_co_citation_edges():
    base = run_debate(make_case(), make_roster(), make_options(1), make_corpus())
    linked = run_debate(make_case(), make_roster(), make_options(1), make_corpus(),
                        DebateConfig(heuristic_linker=True))
    new = {r.triple for r in linked.relations} - {r.triple for r in base.relations}
    assert new
    for source, target, polarity in new:
        assert polarity == "support"
        rel = next(r for r in linked.relations if r.triple == (source, target, polarity))
        assert rel.weight == 0.25
        cited_s = set(linked.arguments[source].cited_evidence)
        cited_t = set(linked.arguments[target].cited_evidence)
        assert cited_s & cited_t
        assert (
            linked.arguments[source].target_option
            == linked.arguments[target].target_option
        )


def test_linker_skips_existing_relation():
    # both scripted round-2 link targets cite doc ranked first, so the
    # explicit support edge already covers the co-citation pair
    cfg = DebateConfig(rounds=2, heuristic_linker=True)
    graph = run_debate(make_case(), make_roster(), make_options(1), make_corpus(), cfg)
    triples = [r.triple for r in graph.relations]
    assert len(triples) == len(set(triples))


def test_dict_responses_accepted():
    def dict_backend(request):
        return scripted_backend(request).to_doc()

    graph_objs = run_debate(make_case(), make_roster(), make_options(1), make_corpus())
    graph_dicts = run_debate(make_case(), make_roster(), make_options(1), make_corpus(),
                             backend=dict_backend)
    assert graph_hash(graph_objs) == graph_hash(graph_dicts)


def test_self_loop_relation_from_backend_rejected():
    def bad_backend(request):
        return BackendResponse(
            support_argument=ProposedArgument("support text"),
            challenge_argument=ProposedArgument("challenge text"),
            relations=(ProposedRelation("new_support", "new_support", "support", 0.5),),
        )

    with pytest.raises(MalformedResponse):
        run_debate(make_case(), make_roster(), make_options(1), make_corpus(),
                   backend=bad_backend)


def test_unresolvable_relation_refs_dropped(caplog):
    def dangling_backend(request):
        return BackendResponse(
            support_argument=ProposedArgument("support text"),
            challenge_argument=ProposedArgument("challenge text"),
            relations=(ProposedRelation("new_support", "ghost-arg", "support", 0.5),),
        )

    with caplog.at_level("WARNING"):
        graph = run_debate(make_case(), make_roster(Role.REGISTERED_NURSE),
                           make_options(1), make_corpus(), backend=dangling_backend)
    assert graph.relations == ()
    assert any("unresolvable" in r.message for r in caplog.records)


def test_new_challenge_ref_resolves():
    def cross_backend(request):
        relations = ()
        if request.round == 1:
            relations = (ProposedRelation("new_support", "new_challenge", "attack", 0.3),)
        return BackendResponse(
            support_argument=ProposedArgument("support text"),
            challenge_argument=ProposedArgument("challenge text"),
            relations=relations,
        )

    graph = run_debate(make_case(), make_roster(Role.REGISTERED_NURSE),
                       make_options(1), make_corpus(), backend=cross_backend)
    assert [r.triple for r in graph.relations] == [
        ("registered_nurse-opt-a-support-1", "registered_nurse-opt-a-challenge-1",
         "attack")
    ]


def test_empty_roster_and_options_rejected():
    with pytest.raises(ValidationError):
        run_debate(make_case(), TeamRoster(roles=()), make_options(1), make_corpus())
    with pytest.raises(ValidationError):
        run_debate(make_case(), make_roster(), [], make_corpus())


def test_build_query_mixes_option_and_case_text():
    case = make_case()
    option = make_options(1)[0]
    query = build_query(case, option)
    assert "option opt-a" in query
    assert "copd" in query
    assert "nutrition_risk" in query


def test_config_validation():
    with pytest.raises(ValidationError):
        DebateConfig(rounds=0)
    with pytest.raises(ValidationError):
        DebateConfig(retrieval_top_k=0)
    with pytest.raises(ValidationError):
        DebateConfig(backend="oracle")


def test_config_round_trip():
    cfg = DebateConfig(rounds=3, backend="scripted", retrieval_top_k=4,
                       heuristic_linker=True)
    assert DebateConfig.from_doc(cfg.to_doc()) == cfg


def test_debated_graph_serializes():
    graph = run_debate(make_case(), make_roster(), make_options(2), make_corpus(),
                       DebateConfig(rounds=2))
    doc = graph_to_doc(graph)
    assert doc["format_version"] == 1
    assert len(doc["arguments"]) == len(graph.arguments)
