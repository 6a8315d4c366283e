"""Exception hierarchy shared by every module.

Each error carries an ``api_code`` (the closed enum used in HTTP error
bodies) and an ``http_status`` so the service layer can map exceptions
mechanically. The CLI maps the same classes to exit codes.
"""

from __future__ import annotations

from typing import Any


class CanoeError(Exception):
    """Base class; subclasses pin api_code/http_status."""

    api_code = "validation"
    http_status = 422

    def __init__(self, message: str, **detail: Any):
        super().__init__(message)
        self.message = message
        self.detail = detail

    def to_doc(self) -> dict:
        return {"code": self.api_code, "message": self.message, "detail": self.detail}


# -- referential / lookup errors -------------------------------------------

class NotFoundError(CanoeError):
    api_code = "not_found"
    http_status = 404


class UnknownArgument(NotFoundError):
    pass


class UnknownOption(NotFoundError):
    pass


class UnknownTarget(NotFoundError):
    """Edit action named an argument that is not live in the session graph."""


class UnknownSession(NotFoundError):
    pass


class UnknownCase(NotFoundError):
    pass


# -- structural validation ---------------------------------------------------

class ValidationError(CanoeError):
    api_code = "validation"
    http_status = 422


class SelfLoop(ValidationError):
    pass


class NegativeWeight(ValidationError):
    pass


class InvalidPayload(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class EmptyCorpus(ValidationError):
    pass


# -- conflicts ----------------------------------------------------------------

class ConflictError(CanoeError):
    api_code = "conflict"
    http_status = 409


class DuplicateId(ConflictError):
    pass


class DuplicateRelation(ConflictError):
    pass


class PendingArguments(ConflictError):
    """Approval refused while arguments are still pending and force is off."""


# -- phase machine ------------------------------------------------------------

class WrongPhase(CanoeError):
    api_code = "wrong_phase"
    http_status = 409


class UnsolvedGraph(WrongPhase):
    """Session opened over a graph without a matching degree assignment."""


# -- numerics -----------------------------------------------------------------

class NonConvergence(CanoeError):
    """Solver hit max_iterations with residual still above tolerance.

    Carries the partial result so contestation can surface it to humans
    instead of silently clamping.
    """

    api_code = "non_convergence"
    http_status = 500

    def __init__(self, message: str, partial=None, residual: float = 0.0,
                 iterations: int = 0):
        super().__init__(message, residual=residual, iterations=iterations)
        self.partial = partial
        self.residual = residual
        self.iterations = iterations


# -- pluggable backends ---------------------------------------------------------

class BackendFailure(CanoeError):
    api_code = "backend_failure"
    http_status = 500


class MalformedResponse(BackendFailure):
    pass


# -- audit --------------------------------------------------------------------

class BrokenChain(CanoeError):
    """Audit log failed verification at a specific entry."""

    api_code = "validation"
    http_status = 422

    def __init__(self, message: str, seq: int):
        super().__init__(message, seq=seq)
        self.seq = seq
