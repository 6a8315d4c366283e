"""Option templates: the base option, feature rules, and output ordering."""

from canoe.argcore import CareOption, OptionCategory, PatientCase
from canoe.pipeline import generate_options


def make_case(**overrides):
    fields = dict(case_id="c-1", age=79)
    fields.update(overrides)
    return PatientCase(**fields)


def option_ids(case):
    return [o.option_id for o in generate_options(case)]


def test_minimal_case_gets_only_the_base_option():
    assert option_ids(make_case()) == ["care-coordination-review"]


def test_sample_style_case_gets_six_options_in_file_order():
    case = make_case(
        conditions=("hypertension", "osteoarthritis"),
        medications=tuple(f"med-{i}" for i in range(6)),
        falls_90d=1,
        flags=frozenset({"lives_alone", "nutrition_risk"}),
    )
    assert option_ids(case) == [
        "care-coordination-review",
        "grab-bar-installation",
        "supervised-walking-program",
        "medication-review",
        "home-care-visits",
        "dietitian-consultation",
    ]


def test_falls_rule_adds_two_options():
    assert option_ids(make_case(falls_90d=1)) == [
        "care-coordination-review",
        "grab-bar-installation",
        "supervised-walking-program",
    ]


def test_depression_rule():
    assert "counseling-referral" in option_ids(
        make_case(flags=frozenset({"depression"}))
    )


def test_polypharmacy_boundary():
    four = make_case(medications=tuple(f"m{i}" for i in range(4)))
    five = make_case(medications=tuple(f"m{i}" for i in range(5)))
    assert "medication-review" not in option_ids(four)
    assert "medication-review" in option_ids(five)


def test_options_are_fully_populated_records():
    for option in generate_options(make_case(falls_90d=2)):
        assert isinstance(option, CareOption)
        assert option.title
        assert option.description
        assert isinstance(option.category, OptionCategory)


def test_option_ids_unique_across_all_rules():
    case = make_case(
        medications=tuple(f"m{i}" for i in range(9)),
        falls_90d=3,
        flags=frozenset({"depression", "lives_alone", "nutrition_risk"}),
    )
    ids = option_ids(case)
    assert len(ids) == len(set(ids)) == 7
