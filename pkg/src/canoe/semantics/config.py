"""Solver, aggregation, and scorer configuration records.

All three serialize into the session file so a replay sees exactly the
numbers the original run used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..canonical import round9
from ..errors import OutOfRange


@dataclass(frozen=True)
class SolverConfig:
    squash: str = "clip"
    logistic_k: float = 4.0
    damping: float = 0.5
    tolerance: float = 1e-6
    max_iterations: int = 10000

    def __post_init__(self):
        if self.squash not in ("clip", "logistic"):
            raise OutOfRange(f"unknown squash function: {self.squash!r}")
        if self.logistic_k <= 0:
            raise OutOfRange("logistic_k must be > 0")
        if not 0.0 < self.damping <= 1.0:
            raise OutOfRange("damping must be in (0,1]")
        if self.tolerance <= 0:
            raise OutOfRange("tolerance must be > 0")
        if self.max_iterations < 1:
            raise OutOfRange("max_iterations must be >= 1")

    def squash_fn(self, v: float) -> float:
        if self.squash == "clip":
            return min(1.0, max(0.0, v))
        return 1.0 / (1.0 + math.exp(-self.logistic_k * (v - 0.5)))

    def to_doc(self) -> dict:
        return {
            "squash": self.squash,
            "logistic_k": round9(self.logistic_k),
            "damping": round9(self.damping),
            "tolerance": round9(self.tolerance),
            "max_iterations": self.max_iterations,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "SolverConfig":
        return cls(
            squash=str(doc.get("squash", "clip")),
            logistic_k=float(doc.get("logistic_k", 4.0)),
            damping=float(doc.get("damping", 0.5)),
            tolerance=float(doc.get("tolerance", 1e-6)),
            max_iterations=int(doc.get("max_iterations", 10000)),
        )


@dataclass(frozen=True)
class AggregationConfig:
    """Soft-max aggregation around the fixed neutral point 0.5."""

    temperature: float = 0.25
    neutral: float = 0.5
    span: float = 0.5

    def __post_init__(self):
        if self.temperature <= 0:
            raise OutOfRange("temperature must be > 0")
        # neutral/span are part of the record for transparency but fixed
        if self.neutral != 0.5 or self.span != 0.5:
            raise OutOfRange("neutral and span are fixed at 0.5")

    def to_doc(self) -> dict:
        return {
            "temperature": round9(self.temperature),
            "neutral": round9(self.neutral),
            "span": round9(self.span),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "AggregationConfig":
        return cls(
            temperature=float(doc.get("temperature", 0.25)),
            neutral=float(doc.get("neutral", 0.5)),
            span=float(doc.get("span", 0.5)),
        )


@dataclass(frozen=True)
class ScorerWeights:
    w_relevance: float = 0.4
    w_consistency: float = 0.4
    w_transparency: float = 0.2

    def __post_init__(self):
        ws = (self.w_relevance, self.w_consistency, self.w_transparency)
        if any(w < 0 for w in ws):
            raise OutOfRange("scorer weights must be >= 0")
        if abs(sum(ws) - 1.0) > 1e-9:
            raise OutOfRange("scorer weights must sum to 1")

    def to_doc(self) -> dict:
        return {
            "w_relevance": round9(self.w_relevance),
            "w_consistency": round9(self.w_consistency),
            "w_transparency": round9(self.w_transparency),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "ScorerWeights":
        return cls(
            w_relevance=float(doc.get("w_relevance", 0.4)),
            w_consistency=float(doc.get("w_consistency", 0.4)),
            w_transparency=float(doc.get("w_transparency", 0.2)),
        )
