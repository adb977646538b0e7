"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class AffprodError(Exception):
    """Base class for all package errors."""


class NotPrime(AffprodError, ValueError):
    pass


class ShapeMismatch(AffprodError, ValueError):
    pass


class RankDeficient(AffprodError, ValueError):
    pass


class SolveError(AffprodError):
    pass


class NoSolution(SolveError):
    """The linear system has no solution."""


class Underdetermined(SolveError):
    """The solution space of the linear system has positive dimension."""


class TooLargeToEnumerate(AffprodError):
    pass


class NotNested(AffprodError, ValueError):
    pass


class EqualDimensions(AffprodError, ValueError):
    pass


class MissingAllOne(AffprodError, ValueError):
    pass


class NotSelfComplementary(AffprodError, ValueError):
    """A component code of Construction I does not contain the all-one word."""

    def __init__(self, component: str):
        super().__init__(f"{component} code does not contain the all-one vector")
        self.component = component


class IncompatibleCosets(AffprodError, ValueError):
    """The two coset representatives violate the order-independence condition."""


class PreconditionError(AffprodError, ValueError):
    pass


class DecodeError(AffprodError):
    pass


class Ambiguous(DecodeError):
    """More than one codeword agrees with the non-erased coordinates."""


class Inconsistent(DecodeError):
    """No codeword agrees with the non-erased coordinates."""


class BoundedDistanceFailure(DecodeError):
    """No unique codeword lies within the decoding radius."""


class DecodeFailure(DecodeError):
    """Product decoding stopped at an unresolvable row or column.

    Attributes:
        kind: ``"ambiguous"`` or ``"inconsistent"``.
        axis: ``"row"`` or ``"column"``.
        index: zero-based index of the offending line.
    """

    def __init__(self, kind: str, axis: str, index: int):
        super().__init__(f"{kind} {axis} {index}")
        self.kind = kind
        self.axis = axis
        self.index = index

    @property
    def location(self) -> str:
        return f"{self.axis}:{self.index}"
