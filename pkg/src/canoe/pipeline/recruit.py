"""Care-team recruitment: level base roster plus case-feature triggers.

Each recruited role remembers which rule brought it in, so the roster
itself is auditable. When a role qualifies more than once, the first
rule in evaluation order (base roster first, then triggers in file
order) keeps the credit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..argcore import ROLE_ORDER, PatientCase, Role
from ..errors import ValidationError
from .complexity import ComplexityLevel
from .rulebook import matches, recruitment_rules


@dataclass(frozen=True)
class TeamRoster:
    roles: tuple[Role, ...]
    triggers: dict[Role, str] = field(default_factory=dict)

    def to_doc(self) -> dict:
        return {
            "roles": [r.value for r in self.roles],
            "triggers": {r.value: name for r, name in sorted(
                self.triggers.items(), key=lambda kv: ROLE_ORDER[kv[0]]
            )},
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "TeamRoster":
        return cls(
            roles=tuple(Role(r) for r in doc["roles"]),
            triggers={Role(r): str(name) for r, name in doc.get("triggers", {}).items()},
        )


def recruit_team(case: PatientCase, level: ComplexityLevel) -> TeamRoster:
    rules = recruitment_rules()
    if level.level not in rules["base_rosters"]:
        raise ValidationError(f"no base roster for complexity level {level.level!r}")
    provenance: dict[Role, str] = {}

    for role_name in rules["base_rosters"][level.level]:
        role = Role(role_name)
        if role not in provenance:
            provenance[role] = f"base:{level.level}"

    for trigger in rules["triggers"]:
        if matches(trigger["when"], case):
            for role_name in trigger["add"]:
                role = Role(role_name)
                if role not in provenance:
                    provenance[role] = trigger["name"]

    ordered = tuple(sorted(provenance, key=lambda r: ROLE_ORDER[r]))
    return TeamRoster(roles=ordered, triggers=provenance)
