"""Recruitment: base rosters by level, feature triggers, and provenance."""

import pytest

from canoe.argcore import PatientCase, Role
from canoe.errors import ValidationError
from canoe.pipeline import ComplexityLevel, TeamRoster, assess_complexity, recruit_team

from oracles import roster_oracle


def make_case(**overrides):
    fields = dict(case_id="c-1", age=79)
    fields.update(overrides)
    return PatientCase(**fields)


def recruit(case):
    return recruit_team(case, assess_complexity(case))


def test_minimal_case_gets_low_base_roster():
    roster = recruit(make_case())
    assert roster.roles == (Role.GENERAL_PRACTITIONER, Role.CARE_COORDINATOR)
    assert roster.triggers == {
        Role.GENERAL_PRACTITIONER: "base:low",
        Role.CARE_COORDINATOR: "base:low",
    }


def test_sample_style_case_recruits_eight_roles():
    case = make_case(
        conditions=("hypertension", "osteoarthritis"),
        medications=tuple(f"med-{i}" for i in range(6)),
        adl_impairments=1,
        iadl_impairments=2,
        falls_90d=1,
        flags=frozenset({"lives_alone", "nutrition_risk"}),
    )
    roster = recruit(case)
    assert [r.value for r in roster.roles] == [
        "registered_nurse",
        "pharmacist",
        "general_practitioner",
        "nutritionist",
        "physical_therapist",
        "occupational_therapist",
        "social_worker",
        "care_coordinator",
    ]
    assert roster.triggers[Role.PHARMACIST] == "polypharmacy"
    assert roster.triggers[Role.NUTRITIONIST] == "nutrition_risk"
    assert roster.triggers[Role.PHYSICAL_THERAPIST] == "recent_falls"
    assert roster.triggers[Role.REGISTERED_NURSE] == "base:high"


def test_base_roster_keeps_credit_over_triggers():
    # occupational_therapist is on the high base roster AND matches the
    # adl_support trigger; the base rule fires first and keeps the credit
    case = make_case(conditions=tuple(f"c{i}" for i in range(5)), adl_impairments=2)
    roster = recruit(case)
    assert roster.triggers[Role.OCCUPATIONAL_THERAPIST] == "base:high"
    assert roster.triggers[Role.HOME_HEALTH_AIDE] == "adl_support"


def test_mental_health_trigger_fires_on_either_flag():
    for flag in ("depression", "cognitive_impairment"):
        roster = recruit(make_case(flags=frozenset({flag})))
        assert Role.PSYCHIATRIST in roster.roles
        assert roster.triggers[Role.PSYCHIATRIST] == "mental_health"


def test_care_coordinator_always_present():
    cases = [
        make_case(),
        make_case(conditions=tuple(f"c{i}" for i in range(12)), adl_impairments=6),
        make_case(flags=frozenset({"nutrition_risk"})),
    ]
    for case in cases:
        assert Role.CARE_COORDINATOR in recruit(case).roles


def test_roles_sorted_in_declaration_order():
    case = make_case(conditions=tuple(f"c{i}" for i in range(12)), falls_90d=2)
    roster = recruit(case)
    values = [r.value for r in roster.roles]
    order = [r.value for r in Role]
    assert values == sorted(values, key=order.index)


def test_matches_roster_oracle():
    variants = [
        make_case(),
        make_case(conditions=("a", "b", "c")),
        make_case(medications=tuple(f"m{i}" for i in range(7))),
        make_case(falls_90d=1, flags=frozenset({"depression"})),
        make_case(adl_impairments=4, iadl_impairments=6,
                  conditions=tuple(f"c{i}" for i in range(8))),
    ]
    for case in variants:
        level = assess_complexity(case)
        got = [r.value for r in recruit_team(case, level).roles]
        assert got == roster_oracle(case.to_doc(), level.level)


def test_roster_round_trip():
    case = make_case(falls_90d=1)
    roster = recruit(case)
    again = TeamRoster.from_doc(roster.to_doc())
    assert again.roles == roster.roles
    assert again.triggers == roster.triggers


def test_unknown_level_rejected():
    with pytest.raises(ValidationError):
        recruit_team(make_case(), ComplexityLevel(level="extreme", raw_score=99))
