"""
Exception hierarchy for the group toolkit.
"""
from typing import Optional


class GroupToolkitError(Exception):
    """Base class for all errors raised by the toolkit."""


class ResourceLimitError(GroupToolkitError):
    """A configured size cap or budget would be exceeded."""

    def __init__(self, message: str, limit: Optional[int] = None, requested: Optional[int] = None):
        super().__init__(message)
        self.limit = limit
        self.requested = requested


class GroupAxiomError(GroupToolkitError, ValueError):
    """A multiplication table violates the group axioms."""


class NotAbelianError(GroupToolkitError, ValueError):
    """An operation that needs an abelian group received a nonabelian one."""


class PresentationError(GroupToolkitError, ValueError):
    """A power-commutator presentation is structurally invalid."""


class PresentationSyntaxError(PresentationError):
    """The presentation text does not match the DSL grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InconsistentPresentationError(PresentationError):
    """Instantiating the presentation does not give a group of the expected order."""


class CollectionBudgetError(GroupToolkitError, RuntimeError):
    """Collection did not reach a normal form within its step budget."""


class AutomorphismError(GroupToolkitError, RuntimeError):
    """The automorphism engine reached an internally inconsistent state."""


class VerificationError(GroupToolkitError, AssertionError):
    """A verified claim does not hold on the computed data."""
