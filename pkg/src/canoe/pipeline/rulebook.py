"""Loader for the shipped rule data: rubric, recruitment triggers, option
templates.

These live as JSON files inside the package so operators can audit and
extend them without touching code. The predicate mini-language is
deliberately tiny; every rule is a conjunction of the keys below.

Predicate keys:
  always: true              fires unconditionally
  min_medications: n        |medications| >= n
  min_falls_90d: n          falls_90d >= n
  min_adl_impairments: n    adl_impairments >= n
  flag: name                flag present on the case
  any_flags: [names]        at least one flag present
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from ..argcore import PatientCase
from ..errors import ValidationError

_PREDICATE_KEYS = frozenset(
    {"always", "min_medications", "min_falls_90d", "min_adl_impairments", "flag", "any_flags"}
)

_FEATURES = {
    "condition_count": lambda case: len(case.conditions),
    "medication_count": lambda case: len(case.medications),
    "adl_impairments": lambda case: case.adl_impairments,
    "iadl_impairments": lambda case: case.iadl_impairments,
    "falls_90d": lambda case: case.falls_90d,
    "hospitalizations_90d": lambda case: case.hospitalizations_90d,
}


def matches(when: dict, case: PatientCase) -> bool:
    """Evaluate one predicate object against a case. Unknown keys are errors."""
    unknown = set(when) - _PREDICATE_KEYS
    if unknown:
        raise ValidationError(f"unknown predicate keys: {sorted(unknown)}")
    if not when:
        raise ValidationError("empty predicate")
    if "always" in when and not when["always"]:
        raise ValidationError("'always' must be true when present")
    if "min_medications" in when and len(case.medications) < int(when["min_medications"]):
        return False
    if "min_falls_90d" in when and case.falls_90d < int(when["min_falls_90d"]):
        return False
    if "min_adl_impairments" in when and case.adl_impairments < int(when["min_adl_impairments"]):
        return False
    if "flag" in when and when["flag"] not in case.flags:
        return False
    if "any_flags" in when and not (set(when["any_flags"]) & case.flags):
        return False
    return True


def feature_value(name: str, case: PatientCase) -> int:
    try:
        return _FEATURES[name](case)
    except KeyError:
        raise ValidationError(f"unknown rubric feature: {name!r}") from None


def _load(name: str) -> dict:
    text = resources.files("canoe.pipeline.data").joinpath(name).read_text("utf-8")
    doc = json.loads(text)
    if doc.get("format_version") != 1:
        raise ValidationError(f"{name}: unsupported format_version")
    return doc


@lru_cache(maxsize=None)
def complexity_rubric() -> dict:
    return _load("complexity_rubric.json")


@lru_cache(maxsize=None)
def recruitment_rules() -> dict:
    return _load("recruitment_rules.json")


@lru_cache(maxsize=None)
def option_templates() -> dict:
    return _load("option_templates.json")
