"""Shared exception types."""


class NegaseqError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetMismatchError(NegaseqError):
    """Two operands with different alphabet sizes were combined."""


class EnumerationBudgetError(NegaseqError):
    """k^n exceeds the configured enumeration budget."""


class GraphSizeError(NegaseqError):
    """Requested explicit graph or export exceeds the size budget."""


class NotAnNosError(NegaseqError):
    """A sequence passed where an NOS was required is not one.

    Carries the colliding window indices as (stream, index) pairs, where
    stream is "S" or "-S^R".
    """

    def __init__(self, message, first, second):
        super().__init__(message)
        self.first = first
        self.second = second


class InternalConsistencyError(NegaseqError):
    """A closed-form numerator came out odd, or an equivalent impossibility."""
