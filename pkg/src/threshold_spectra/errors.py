"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class ThresholdSpectraError(Exception):
    """Base class for every error raised by this package."""


class SequenceParseError(ThresholdSpectraError, ValueError):
    """Input text does not describe a threshold graph."""


class EmptyInputError(SequenceParseError):
    pass


class LeadingOneError(SequenceParseError):
    pass


class MalformedTokenError(SequenceParseError):
    pass


class ZeroCountError(SequenceParseError):
    pass


class DimensionError(ThresholdSpectraError, TypeError):
    """Arithmetic mixing lambda-carrying and dimensionless scalars incorrectly."""


class LambdaZeroError(ThresholdSpectraError, ValueError):
    pass


class TooFewBagsError(ThresholdSpectraError, ValueError):
    pass


class HypothesisViolation(ThresholdSpectraError):
    """A reduction step found its precondition false.

    ``check`` names the failed equality; ``lhs`` and ``rhs`` hold the two
    exact values that were expected to agree.
    """

    def __init__(self, check: str, lhs: object, rhs: object) -> None:
        self.check = check
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"{check}: {lhs} != {rhs}")


class NonSymmetricError(ThresholdSpectraError, ValueError):
    pass


class NoConvergenceError(ThresholdSpectraError, RuntimeError):
    pass


class DimensionMismatchError(ThresholdSpectraError, ValueError):
    pass


class SizeMismatchError(ThresholdSpectraError, ValueError):
    pass
