"""Error types shared across the toolkit.

Every error a user can provoke with a well-formed command derives from
``ReasoningError``; the CLI maps these to exit code 3.
"""
from typing import Optional


class ReasoningError(Exception):
    """Base class for semantic errors."""


class FormulaSyntaxError(ReasoningError):
    """Raised when formula text does not conform to the grammar."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ModelError(ReasoningError):
    """Raised for malformed model or context documents."""


class NonTree(ModelError):
    pass


class RaggedDepth(ModelError):
    pass


class UnknownState(ModelError):
    pass


class TimelineNotAcceptable(ModelError):
    pass


class InstantOutOfRange(ModelError):
    pass


class HorizonExceeded(ReasoningError):
    """Raised when a formula would read past the model depth."""


class NonXYAntecedent(ReasoningError):
    """Raised when a conditional's antecedent is not temporal-only."""


class FragmentViolation(ReasoningError):
    """Raised when an operation receives a formula outside its fragment."""


class ReductionDiverged(ReasoningError):
    """Raised when a rewrite loop exceeds its step bound."""


class WitnessVerificationFailed(ReasoningError):
    """A constructed witness did not replay; this is an internal bug."""


class BudgetExceeded(ReasoningError):
    """Raised when a search or flattening pass exceeds its configured budget."""


class ProofDocumentError(ReasoningError):
    """Raised for unreadable or malformed proof documents."""
