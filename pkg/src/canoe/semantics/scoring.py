"""Intrinsic strength τ: how convincing an argument is on its own.

τ blends three criteria in [0,1]:
  relevance     token overlap between the argument and the case
  consistency   best (similarity · reliability) over cited evidence
  transparency  citing anything at all, plus enough words to judge
"""

from __future__ import annotations

from ..argcore import Argument, EvidenceDoc, PatientCase
from ..canonical import round9
from ..textutil import overlap, tokens
from .config import ScorerWeights

# token count at which the length half of transparency saturates
FULL_LENGTH_TOKENS = 30


def case_text(case: PatientCase) -> str:
    """The case text relevance is measured against: conditions, flags, narrative."""
    parts = list(case.conditions) + sorted(case.flags) + [case.narrative]
    return " ".join(p for p in parts if p)


def score_intrinsic(
    arg: Argument,
    case: PatientCase,
    evidence: list[EvidenceDoc],
    weights: ScorerWeights = ScorerWeights(),
) -> float:
    relevance = overlap(arg.content, case_text(case))

    by_id = {doc.doc_id: doc for doc in evidence}
    consistency = 0.0
    for doc_id in arg.cited_evidence:
        doc = by_id.get(doc_id)
        if doc is not None:
            consistency = max(consistency, doc.similarity * doc.reliability)

    has_citation = 1.0 if arg.cited_evidence else 0.0
    length = min(1.0, len(tokens(arg.content)) / FULL_LENGTH_TOKENS)
    transparency = 0.5 * has_citation + 0.5 * length

    tau = (
        weights.w_relevance * relevance
        + weights.w_consistency * consistency
        + weights.w_transparency * transparency
    )
    return round9(tau)
