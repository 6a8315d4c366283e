"""Argument backends: the deterministic scripted stand-in and the
external HTTP contract.

A backend is any callable taking a BackendRequest and returning a
BackendResponse with exactly one support and one challenge argument.
The scripted backend is a pure function, so debates run offline and
byte-identically; the external backend posts the same request document
to a configured URL and enforces the same response shape.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import httpx

from ..argcore import CareOption, EvidenceDoc, PatientCase, Role
from ..canonical import round9
from ..errors import BackendFailure, MalformedResponse

ENV_BACKEND_URL = "CANOE_BACKEND_URL"
ENV_BACKEND_TOKEN = "CANOE_BACKEND_TOKEN"

NEW_SUPPORT_REF = "new_support"
NEW_CHALLENGE_REF = "new_challenge"

REQUEST_TIMEOUT_SECONDS = 30.0


@dataclass(frozen=True)
class PriorArgument:
    """Slim view of an already-inserted argument, as backends see it."""

    arg_id: str
    content: str
    stance: str
    role: str
    tau: float

    def to_doc(self) -> dict:
        return {
            "arg_id": self.arg_id,
            "content": self.content,
            "stance": self.stance,
            "role": self.role,
            "tau": round9(self.tau),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "PriorArgument":
        return cls(
            arg_id=str(doc["arg_id"]),
            content=str(doc["content"]),
            stance=str(doc["stance"]),
            role=str(doc["role"]),
            tau=float(doc["tau"]),
        )


@dataclass(frozen=True)
class BackendRequest:
    case: PatientCase
    option: CareOption
    role: Role
    round: int
    prior_arguments: tuple[PriorArgument, ...] = ()
    evidence: tuple[EvidenceDoc, ...] = ()

    def to_doc(self) -> dict:
        return {
            "format_version": 1,
            "case": self.case.to_doc(),
            "option": self.option.to_doc(),
            "role": self.role.value,
            "round": self.round,
            "prior_arguments": [p.to_doc() for p in self.prior_arguments],
            "evidence": [d.to_doc() for d in self.evidence],
        }


@dataclass(frozen=True)
class ProposedArgument:
    content: str
    cited_evidence: tuple[str, ...] = ()

    def to_doc(self) -> dict:
        return {"content": self.content, "cited_evidence": list(self.cited_evidence)}


@dataclass(frozen=True)
class ProposedRelation:
    source_ref: str
    target_ref: str
    polarity: str
    weight: float

    def to_doc(self) -> dict:
        return {
            "source_ref": self.source_ref,
            "target_ref": self.target_ref,
            "polarity": self.polarity,
            "weight": round9(self.weight),
        }


@dataclass(frozen=True)
class BackendResponse:
    support_argument: ProposedArgument
    challenge_argument: ProposedArgument
    relations: tuple[ProposedRelation, ...] = ()

    def to_doc(self) -> dict:
        return {
            "support_argument": self.support_argument.to_doc(),
            "challenge_argument": self.challenge_argument.to_doc(),
            "relations": [r.to_doc() for r in self.relations],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "BackendResponse":
        try:
            support = doc["support_argument"]
            challenge = doc["challenge_argument"]
            response = cls(
                support_argument=ProposedArgument(
                    content=str(support["content"]),
                    cited_evidence=tuple(str(d) for d in support.get("cited_evidence", [])),
                ),
                challenge_argument=ProposedArgument(
                    content=str(challenge["content"]),
                    cited_evidence=tuple(str(d) for d in challenge.get("cited_evidence", [])),
                ),
                relations=tuple(
                    ProposedRelation(
                        source_ref=str(r["source_ref"]),
                        target_ref=str(r["target_ref"]),
                        polarity=str(r["polarity"]),
                        weight=float(r.get("weight", 0.5)),
                    )
                    for r in doc.get("relations", [])
                ),
            )
        except (KeyError, TypeError) as exc:
            raise MalformedResponse(f"bad backend response shape: {exc}") from exc
        if not response.support_argument.content or not response.challenge_argument.content:
            raise MalformedResponse("backend returned an empty argument")
        for rel in response.relations:
            if rel.polarity not in ("support", "attack"):
                raise MalformedResponse(f"bad relation polarity: {rel.polarity!r}")
            if rel.weight < 0:
                raise MalformedResponse(f"negative relation weight: {rel.weight}")
        return response


# -- scripted backend ------------------------------------------------------------

_SUPPORT_TEMPLATES = {
    Role.REGISTERED_NURSE: (
        "Nursing assessment for case {case_id} supports {title}; monitoring needs"
        " around {conditions} fit this step well."
    ),
    Role.PHARMACIST: (
        "With {n_meds} active medications on file, {title} lowers interaction and"
        " dosing risk for this patient."
    ),
    Role.GENERAL_PRACTITIONER: (
        "Given {conditions} at age {age}, {title} is clinically appropriate and"
        " proportionate."
    ),
    Role.NUTRITIONIST: (
        "Dietary findings in the assessment indicate {title} would address current"
        " nutrition risk directly."
    ),
    Role.PHYSICAL_THERAPIST: (
        "Mobility review notes {falls} falls in the last 90 days; {title} targets"
        " that risk directly."
    ),
    Role.OCCUPATIONAL_THERAPIST: (
        "With {adl} ADL and {iadl} IADL limitations recorded, {title} makes daily"
        " routines safer."
    ),
    Role.PSYCHIATRIST: (
        "Mood and cognition notes in the record support {title} as part of a safe"
        " overall plan."
    ),
    Role.SOCIAL_WORKER: (
        "Psychosocial review (lives alone: {alone}) finds {title} protective of"
        " independence and community ties."
    ),
    Role.HOME_HEALTH_AIDE: (
        "Day-to-day observations suggest {title} would ease routine care tasks in"
        " the home."
    ),
    Role.CARE_COORDINATOR: (
        "Service review for case {case_id} finds {title} consistent with agreed"
        " goals of care."
    ),
}

_CHALLENGE_TEMPLATES = {
    Role.REGISTERED_NURSE: (
        "Nursing concern: adding {title} may overload the visit schedule already"
        " covering {conditions}."
    ),
    Role.PHARMACIST: (
        "Pharmacist caution: {title} should wait until the {n_meds} current"
        " medications are reconciled."
    ),
    Role.GENERAL_PRACTITIONER: (
        "GP reservation: benefit of {title} is uncertain while {first_condition}"
        " remains stable."
    ),
    Role.NUTRITIONIST: (
        "Nutrition caution: intake should be reassessed before {title} changes the"
        " daily routine."
    ),
    Role.PHYSICAL_THERAPIST: (
        "Therapy concern: exercise tolerance is unverified after {falls} recent"
        " falls, so {title} may be premature."
    ),
    Role.OCCUPATIONAL_THERAPIST: (
        "OT concern: a home layout assessment should precede {title} to avoid new"
        " hazards."
    ),
    Role.PSYCHIATRIST: (
        "Psychiatric caution: engagement with {title} may be limited until mood is"
        " addressed."
    ),
    Role.SOCIAL_WORKER: (
        "Social work concern: cost and access barriers to {title} have not been"
        " assessed."
    ),
    Role.HOME_HEALTH_AIDE: (
        "Aide concern: {title} adds visits that could disrupt the established"
        " daily routine."
    ),
    Role.CARE_COORDINATOR: (
        "Coordination concern: overlapping services need sequencing before {title}"
        " is added."
    ),
}


def _template_params(request: BackendRequest) -> dict:
    case = request.case
    conditions = ", ".join(case.conditions) if case.conditions else "no documented conditions"
    return {
        "case_id": case.case_id,
        "title": request.option.title,
        "age": case.age,
        "conditions": conditions,
        "first_condition": case.conditions[0] if case.conditions else "the current condition",
        "n_meds": len(case.medications),
        "falls": case.falls_90d,
        "adl": case.adl_impairments,
        "iadl": case.iadl_impairments,
        "alone": "yes" if "lives_alone" in case.flags else "no",
    }


def _best_prior(priors: tuple[PriorArgument, ...], stance: str) -> PriorArgument | None:
    candidates = [p for p in priors if p.stance == stance]
    if not candidates:
        return None
    # max tau, ties to the lexicographically smallest arg_id
    return min(candidates, key=lambda p: (-p.tau, p.arg_id))


def scripted_backend(request: BackendRequest) -> BackendResponse:
    params = _template_params(request)
    support_text = _SUPPORT_TEMPLATES[request.role].format(**params)
    challenge_text = _CHALLENGE_TEMPLATES[request.role].format(**params)
    if request.round >= 2:
        support_text = f"Round {request.round}: {support_text}"
        challenge_text = f"Round {request.round}: {challenge_text}"

    support_cites: tuple[str, ...] = ()
    challenge_cites: tuple[str, ...] = ()
    if request.evidence:
        top = request.evidence[0]
        support_text += f" Evidence {top.doc_id} applies."
        support_cites = (top.doc_id,)
    if len(request.evidence) >= 2:
        second = request.evidence[1]
        challenge_text += f" See {second.doc_id}."
        challenge_cites = (second.doc_id,)

    relations: list[ProposedRelation] = []
    if request.round >= 2:
        ally = _best_prior(request.prior_arguments, "support")
        if ally is not None:
            relations.append(
                ProposedRelation(NEW_SUPPORT_REF, ally.arg_id, "support", 0.5)
            )
        rival = _best_prior(request.prior_arguments, "challenge")
        if rival is not None:
            relations.append(
                ProposedRelation(NEW_SUPPORT_REF, rival.arg_id, "attack", 0.5)
            )

    return BackendResponse(
        support_argument=ProposedArgument(support_text, support_cites),
        challenge_argument=ProposedArgument(challenge_text, challenge_cites),
        relations=tuple(relations),
    )


# -- external backend --------------------------------------------------------------

@dataclass
class ExternalBackend:
    """POSTs each request to a configured URL; 30 s timeout, no retries."""

    url: str
    token: str | None = None
    _client: httpx.Client | None = field(default=None, repr=False)

    @classmethod
    def from_env(cls) -> "ExternalBackend":
        url = os.environ.get(ENV_BACKEND_URL)
        if not url:
            raise BackendFailure(f"{ENV_BACKEND_URL} is not set")
        return cls(url=url, token=os.environ.get(ENV_BACKEND_TOKEN))

    def __call__(self, request: BackendRequest) -> BackendResponse:
        headers = {}
        if self.token:
            headers["Authorization"] = f"Bearer {self.token}"
        try:
            if self._client is not None:
                resp = self._client.post(
                    self.url, json=request.to_doc(), headers=headers,
                    timeout=REQUEST_TIMEOUT_SECONDS,
                )
            else:
                resp = httpx.post(
                    self.url, json=request.to_doc(), headers=headers,
                    timeout=REQUEST_TIMEOUT_SECONDS,
                )
        except httpx.HTTPError as exc:
            raise BackendFailure(f"backend request failed: {exc}") from exc
        if resp.status_code != 200:
            raise BackendFailure(f"backend returned HTTP {resp.status_code}")
        try:
            doc = resp.json()
        except ValueError as exc:
            raise MalformedResponse("backend response is not JSON") from exc
        return BackendResponse.from_doc(doc)
