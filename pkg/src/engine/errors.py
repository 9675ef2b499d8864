"""
Exception hierarchy for the contract engine.

Negative mathematical results (infeasible LP, not monotone implementable,
infinite gap) are reported in-band as statuses and never raised.
"""


class AmbiconError(Exception):
    """Base class for all engine errors."""


class InstanceError(AmbiconError):
    """Invalid instance data: row sums, negative entries, ragged matrix, index range."""


class ContractError(AmbiconError):
    """Invalid contract data: length mismatch, negative payment, empty or duplicate set."""


class PreconditionError(AmbiconError):
    """An operation was called outside its precondition."""


class LpError(AmbiconError):
    """Malformed linear program."""


class InternalInconsistency(AmbiconError):
    """A post-verification that must hold by construction failed."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DocumentError(AmbiconError):
    """An input document is missing, unreadable or not valid JSON."""
