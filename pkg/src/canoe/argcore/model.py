"""Domain types and the argument-graph store shared by every other module.

Graphs have value semantics: every mutation returns a new graph and the
old one stays valid. Iteration order over arguments is always the
lexicographic order of arg_id; all downstream numerics depend on that
contract, so no code may iterate a graph's dicts in insertion order.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from ..canonical import round9
from ..errors import (
    DuplicateId,
    DuplicateRelation,
    NegativeWeight,
    SelfLoop,
    UnknownArgument,
    UnknownOption,
    ValidationError,
)


class Role(str, Enum):
    """Care-team roles. Declaration order is the roster ordering contract."""

    REGISTERED_NURSE = "registered_nurse"
    PHARMACIST = "pharmacist"
    GENERAL_PRACTITIONER = "general_practitioner"
    NUTRITIONIST = "nutritionist"
    PHYSICAL_THERAPIST = "physical_therapist"
    OCCUPATIONAL_THERAPIST = "occupational_therapist"
    PSYCHIATRIST = "psychiatrist"
    SOCIAL_WORKER = "social_worker"
    HOME_HEALTH_AIDE = "home_health_aide"
    CARE_COORDINATOR = "care_coordinator"
    # Human actors; appear in audit entries, never as argument authors.
    HUMAN_REVIEWER = "human_reviewer"
    HUMAN_CARE_PLANNER = "human_care_planner"


PROVIDER_ROLES: tuple[Role, ...] = tuple(r for r in Role if not r.value.startswith("human_"))
HUMAN_ROLES: tuple[Role, ...] = (Role.HUMAN_REVIEWER, Role.HUMAN_CARE_PLANNER)
ROLE_ORDER: dict[Role, int] = {r: i for i, r in enumerate(Role)}


class Stance(str, Enum):
    SUPPORT = "support"
    CHALLENGE = "challenge"


class Polarity(str, Enum):
    SUPPORT = "support"
    ATTACK = "attack"


class ArgumentStatus(str, Enum):
    PENDING = "pending"
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    MODIFIED = "modified"
    ADDED = "added"


class OptionCategory(str, Enum):
    SAFETY = "safety"
    MOBILITY = "mobility"
    MEDICATION = "medication"
    NUTRITION = "nutrition"
    PSYCHOSOCIAL = "psychosocial"
    COORDINATION = "coordination"


class SourceType(str, Enum):
    GUIDELINE = "guideline"
    CASE_RECORD = "case_record"
    ASSESSMENT_NOTE = "assessment_note"


VALID_FLAGS = frozenset(
    {"cognitive_impairment", "depression", "lives_alone", "nutrition_risk"}
)


@dataclass(frozen=True)
class PatientCase:
    """Structured description of the person the plan is for."""

    case_id: str
    age: int
    conditions: tuple[str, ...] = ()
    medications: tuple[str, ...] = ()
    adl_impairments: int = 0
    iadl_impairments: int = 0
    falls_90d: int = 0
    hospitalizations_90d: int = 0
    flags: frozenset[str] = frozenset()
    narrative: str = ""
    assessment_source: str = ""

    def __post_init__(self):
        if not self.case_id:
            raise ValidationError("case_id must be nonempty")
        if self.age < 0:
            raise ValidationError("age must be >= 0")
        if not 0 <= self.adl_impairments <= 6:
            raise ValidationError("adl_impairments must be in 0..6")
        if not 0 <= self.iadl_impairments <= 8:
            raise ValidationError("iadl_impairments must be in 0..8")
        if self.falls_90d < 0 or self.hospitalizations_90d < 0:
            raise ValidationError("event counts must be >= 0")
        unknown = set(self.flags) - VALID_FLAGS
        if unknown:
            raise ValidationError(f"unknown flags: {sorted(unknown)}")

    def to_doc(self) -> dict:
        return {
            "format_version": 1,
            "case_id": self.case_id,
            "age": self.age,
            "conditions": list(self.conditions),
            "medications": list(self.medications),
            "adl_impairments": self.adl_impairments,
            "iadl_impairments": self.iadl_impairments,
            "falls_90d": self.falls_90d,
            "hospitalizations_90d": self.hospitalizations_90d,
            "flags": sorted(self.flags),
            "narrative": self.narrative,
            "assessment_source": self.assessment_source,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "PatientCase":
        try:
            return cls(
                case_id=str(doc["case_id"]),
                age=int(doc["age"]),
                conditions=tuple(doc.get("conditions", [])),
                medications=tuple(doc.get("medications", [])),
                adl_impairments=int(doc.get("adl_impairments", 0)),
                iadl_impairments=int(doc.get("iadl_impairments", 0)),
                falls_90d=int(doc.get("falls_90d", 0)),
                hospitalizations_90d=int(doc.get("hospitalizations_90d", 0)),
                flags=frozenset(doc.get("flags", [])),
                narrative=str(doc.get("narrative", "")),
                assessment_source=str(doc.get("assessment_source", "")),
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed case document: {exc}") from exc


@dataclass(frozen=True)
class EvidenceDoc:
    """Retrieved document; similarity is stamped at retrieval time."""

    doc_id: str
    text: str
    source_type: SourceType
    reliability: float
    similarity: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.reliability <= 1.0:
            raise ValidationError(f"reliability out of [0,1]: {self.reliability}")
        if not 0.0 <= self.similarity <= 1.0:
            raise ValidationError(f"similarity out of [0,1]: {self.similarity}")

    def to_doc(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "text": self.text,
            "source_type": self.source_type.value,
            "reliability": round9(self.reliability),
            "similarity": round9(self.similarity),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "EvidenceDoc":
        return cls(
            doc_id=str(doc["doc_id"]),
            text=str(doc.get("text", "")),
            source_type=SourceType(doc["source_type"]),
            reliability=float(doc["reliability"]),
            similarity=float(doc.get("similarity", 0.0)),
        )


@dataclass(frozen=True)
class CareOption:
    option_id: str
    title: str
    description: str
    category: OptionCategory

    def to_doc(self) -> dict:
        return {
            "option_id": self.option_id,
            "title": self.title,
            "description": self.description,
            "category": self.category.value,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "CareOption":
        return cls(
            option_id=str(doc["option_id"]),
            title=str(doc["title"]),
            description=str(doc.get("description", "")),
            category=OptionCategory(doc["category"]),
        )


@dataclass(frozen=True)
class Argument:
    """One supporting or challenging point about a care option.

    Content is opaque text to this layer. stance and role are immutable
    after creation; edits that change content go through replace().
    """

    arg_id: str
    content: str
    stance: Stance
    role: Role
    target_option: str
    cited_evidence: tuple[str, ...] = ()
    tau: float = 0.0
    tau_pinned: bool = False
    status: ArgumentStatus = ArgumentStatus.PENDING

    def __post_init__(self):
        if not self.arg_id:
            raise ValidationError("arg_id must be nonempty")
        if not self.content:
            raise ValidationError("argument content must be nonempty")
        if not 0.0 <= self.tau <= 1.0:
            raise ValidationError(f"tau out of [0,1]: {self.tau}")
        if self.role in HUMAN_ROLES:
            raise ValidationError("arguments are authored by provider roles")

    def to_doc(self) -> dict:
        return {
            "arg_id": self.arg_id,
            "content": self.content,
            "stance": self.stance.value,
            "role": self.role.value,
            "target_option": self.target_option,
            "cited_evidence": list(self.cited_evidence),
            "tau": round9(self.tau),
            "tau_pinned": self.tau_pinned,
            "status": self.status.value,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "Argument":
        return cls(
            arg_id=str(doc["arg_id"]),
            content=str(doc["content"]),
            stance=Stance(doc["stance"]),
            role=Role(doc["role"]),
            target_option=str(doc["target_option"]),
            cited_evidence=tuple(doc.get("cited_evidence", [])),
            tau=float(doc.get("tau", 0.0)),
            tau_pinned=bool(doc.get("tau_pinned", False)),
            status=ArgumentStatus(doc.get("status", "pending")),
        )


@dataclass(frozen=True)
class Relation:
    """Directed support/attack edge with a non-negative influence weight."""

    source: str
    target: str
    polarity: Polarity
    weight: float

    def __post_init__(self):
        if self.source == self.target:
            raise SelfLoop(f"relation {self.source} -> itself")
        if self.weight < 0:
            raise NegativeWeight(f"weight {self.weight} on {self.source}->{self.target}")

    @property
    def triple(self) -> tuple[str, str, str]:
        return (self.source, self.target, self.polarity.value)

    def to_doc(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "polarity": self.polarity.value,
            "weight": round9(self.weight),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "Relation":
        return cls(
            source=str(doc["source"]),
            target=str(doc["target"]),
            polarity=Polarity(doc["polarity"]),
            weight=float(doc["weight"]),
        )


@dataclass(frozen=True)
class ArgumentGraph:
    """The argument pool, its relations, and the options under debate."""

    arguments: dict[str, Argument] = field(default_factory=dict)
    relations: tuple[Relation, ...] = ()
    options: dict[str, CareOption] = field(default_factory=dict)

    # -- deterministic views ------------------------------------------------

    def argument_ids(self) -> list[str]:
        return sorted(self.arguments)

    def option_ids(self) -> list[str]:
        return sorted(self.options)

    def sorted_relations(self) -> list[Relation]:
        return sorted(self.relations, key=lambda r: r.triple)

    def incoming(self, target: str, polarity: Polarity) -> list[Relation]:
        """Incoming edges of one polarity, ordered by lexicographic source id."""
        rels = [r for r in self.relations if r.target == target and r.polarity == polarity]
        rels.sort(key=lambda r: (r.source, r.target, r.polarity.value))
        return rels

    def arguments_for_option(self, option_id: str, stance: Stance | None = None) -> list[Argument]:
        args = [
            a
            for _, a in sorted(self.arguments.items())
            if a.target_option == option_id and (stance is None or a.stance == stance)
        ]
        return args

    def get_argument(self, arg_id: str) -> Argument:
        try:
            return self.arguments[arg_id]
        except KeyError:
            raise UnknownArgument(f"no argument {arg_id!r}") from None

    def get_option(self, option_id: str) -> CareOption:
        try:
            return self.options[option_id]
        except KeyError:
            raise UnknownOption(f"no option {option_id!r}") from None

    # -- functional updates --------------------------------------------------

    def with_option(self, option: CareOption) -> "ArgumentGraph":
        if option.option_id in self.options:
            raise DuplicateId(f"option {option.option_id!r} already present")
        options = dict(self.options)
        options[option.option_id] = option
        return replace(self, options=options)

    def with_argument(self, arg: Argument) -> "ArgumentGraph":
        if arg.arg_id in self.arguments:
            raise DuplicateId(f"argument {arg.arg_id!r} already present")
        if arg.target_option not in self.options:
            raise UnknownOption(f"argument targets unknown option {arg.target_option!r}")
        arguments = dict(self.arguments)
        arguments[arg.arg_id] = arg
        return replace(self, arguments=arguments)

    def replace_argument(self, arg: Argument) -> "ArgumentGraph":
        if arg.arg_id not in self.arguments:
            raise UnknownArgument(f"no argument {arg.arg_id!r}")
        arguments = dict(self.arguments)
        arguments[arg.arg_id] = arg
        return replace(self, arguments=arguments)

    def without_argument(self, arg_id: str) -> "ArgumentGraph":
        if arg_id not in self.arguments:
            raise UnknownArgument(f"no argument {arg_id!r}")
        arguments = dict(self.arguments)
        del arguments[arg_id]
        relations = tuple(
            r for r in self.relations if r.source != arg_id and r.target != arg_id
        )
        return replace(self, arguments=arguments, relations=relations)

    def with_relation(self, rel: Relation) -> "ArgumentGraph":
        if rel.source not in self.arguments:
            raise UnknownArgument(f"relation source {rel.source!r} not in graph")
        if rel.target not in self.arguments:
            raise UnknownArgument(f"relation target {rel.target!r} not in graph")
        if any(r.triple == rel.triple for r in self.relations):
            raise DuplicateRelation(f"duplicate relation {rel.triple}")
        return replace(self, relations=self.relations + (rel,))

    def check_integrity(self) -> None:
        """Raise if any relation endpoint is dangling or any target option is unknown."""
        for rel in self.relations:
            if rel.source not in self.arguments or rel.target not in self.arguments:
                raise ValidationError(f"dangling relation {rel.triple}")
        for arg in self.arguments.values():
            if arg.target_option not in self.options:
                raise ValidationError(
                    f"argument {arg.arg_id} targets unknown option {arg.target_option}"
                )


@dataclass
class DegreeAssignment:
    """Solver output: per-argument degrees plus per-option scores."""

    degrees: dict[str, float]
    option_scores: dict[str, float] = field(default_factory=dict)
    iterations_used: int = 0
    residual: float = 0.0

    def to_doc(self, fingerprint: str | None = None) -> dict:
        doc = {
            "format_version": 1,
            "degrees": {k: round9(v) for k, v in sorted(self.degrees.items())},
            "option_scores": {k: round9(v) for k, v in sorted(self.option_scores.items())},
            "iterations_used": self.iterations_used,
            "residual": round9(self.residual),
        }
        if fingerprint is not None:
            doc["graph_fingerprint"] = fingerprint
        return doc

    @classmethod
    def from_doc(cls, doc: dict) -> "DegreeAssignment":
        return cls(
            degrees={str(k): float(v) for k, v in doc["degrees"].items()},
            option_scores={str(k): float(v) for k, v in doc.get("option_scores", {}).items()},
            iterations_used=int(doc.get("iterations_used", 0)),
            residual=float(doc.get("residual", 0.0)),
        )


# -- module-level operations ----------------------------------------------------

def add_argument(graph: ArgumentGraph, arg: Argument) -> ArgumentGraph:
    return graph.with_argument(arg)


def remove_argument(graph: ArgumentGraph, arg_id: str) -> ArgumentGraph:
    return graph.without_argument(arg_id)


def add_relation(graph: ArgumentGraph, rel: Relation) -> ArgumentGraph:
    return graph.with_relation(rel)


def participation_summary(graph: ArgumentGraph) -> dict[Role, dict[str, int]]:
    """Per-role counts of live support/challenge arguments.

    Every provider role appears, zeros included; the counts partition the
    live arguments, so the grand total equals the argument count.
    """
    summary = {role: {"support_count": 0, "challenge_count": 0} for role in PROVIDER_ROLES}
    for arg_id in graph.argument_ids():
        arg = graph.arguments[arg_id]
        key = "support_count" if arg.stance == Stance.SUPPORT else "challenge_count"
        summary[arg.role][key] += 1
    return summary
