"""Candidate care options from feature-triggered templates.

The coordination review ships on every case; the rest fire off the same
predicate mini-language the recruiter uses. Output order is the data
file's order (base options first, then rule options), which downstream
code treats as the canonical option order.
"""

from __future__ import annotations

from ..argcore import CareOption, PatientCase
from .rulebook import matches, option_templates


def generate_options(case: PatientCase) -> list[CareOption]:
    data = option_templates()
    options = [CareOption.from_doc(doc) for doc in data["base_options"]]
    for rule in data["rules"]:
        if matches(rule["when"], case):
            options.extend(CareOption.from_doc(doc) for doc in rule["options"])
    return options
