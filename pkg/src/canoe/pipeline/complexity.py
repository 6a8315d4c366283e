"""Case complexity: a transparent additive rubric over assessment fields."""

from __future__ import annotations

from dataclasses import dataclass

from ..argcore import PatientCase
from ..errors import ValidationError
from .rulebook import complexity_rubric, feature_value


@dataclass(frozen=True)
class ComplexityLevel:
    level: str
    raw_score: int

    def to_doc(self) -> dict:
        return {"level": self.level, "raw_score": self.raw_score}

    @classmethod
    def from_doc(cls, doc: dict) -> "ComplexityLevel":
        return cls(level=str(doc["level"]), raw_score=int(doc["raw_score"]))


def _score_term(term: dict, case: PatientCase) -> int:
    kind = term["kind"]
    points = int(term["points"])
    if kind == "per_unit":
        return points * feature_value(term["feature"], case)
    if kind == "threshold":
        return points if feature_value(term["feature"], case) >= int(term["threshold"]) else 0
    if kind == "flag":
        return points if term["flag"] in case.flags else 0
    raise ValidationError(f"unknown rubric term kind: {kind!r}")


def assess_complexity(case: PatientCase) -> ComplexityLevel:
    rubric = complexity_rubric()
    raw = sum(_score_term(term, case) for term in rubric["terms"])
    for band in rubric["levels"]:
        ceiling = band["max_score"]
        if ceiling is None or raw <= ceiling:
            return ComplexityLevel(level=band["level"], raw_score=raw)
    raise ValidationError("rubric level bands do not cover the score range")
