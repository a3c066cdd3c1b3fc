"""Exception hierarchy for hermdig."""

from typing import Optional, Sequence, Tuple


class HermdigError(Exception):
    """Base class for every error raised by hermdig."""


class ConfigError(HermdigError):
    pass


class InvalidDigraphError(HermdigError):
    pass


class DecodeError(HermdigError):
    """Malformed hd6 or text input. `position` is the offending character index."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownFamilyError(HermdigError):
    pass


class FamilyParameterError(HermdigError):
    pass


class InvalidVertexSetError(HermdigError):
    pass


class _PairsError(HermdigError):
    def __init__(self, message: str, pairs: Sequence[Tuple[int, int]]):
        shown = ", ".join(f"{u}-{v}" for u, v in pairs)
        super().__init__(f"{message}: {shown}")
        self.pairs = list(pairs)


class DigonInCutError(_PairsError):
    def __init__(self, pairs: Sequence[Tuple[int, int]]):
        super().__init__("cut contains digons", pairs)


class NonDigonInCutError(_PairsError):
    def __init__(self, pairs: Sequence[Tuple[int, int]]):
        super().__init__("cut contains pairs that are not digons", pairs)


class InadmissiblePartitionError(HermdigError):
    def __init__(self, pair: Tuple[int, int], reason: str):
        super().__init__(f"inadmissible partition at {pair[0]}-{pair[1]}: {reason}")
        self.pair = pair
        self.reason = reason


class UnderlyingNotCycleError(HermdigError):
    pass


class HasDigonError(HermdigError):
    pass


class NotWeaklyConnectedError(HermdigError):
    pass


class EmptyDigraphError(HermdigError):
    pass


class DimensionMismatchError(HermdigError):
    pass


class InvalidPartitionError(HermdigError):
    pass


class ConvergenceError(HermdigError):
    pass


class UnsupportedOrderError(HermdigError):
    pass


class InvariantViolation(HermdigError):
    """A proven identity failed to hold. Always a bug or a counterexample."""
