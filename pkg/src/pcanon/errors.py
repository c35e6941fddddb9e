"""Exception types shared across the library.

Every domain failure raises a subclass of PcanonError so callers (and the
command line driver) can distinguish bad mathematics from bad input: the
CLI maps ParseError to exit status 2 and every other PcanonError to 1.
"""


class PcanonError(Exception):
    """Base class for all library errors."""


class MixedFields(PcanonError):
    """Operands live in different scalar fields; nothing is coerced silently."""


class NumericFieldUnsupported(PcanonError):
    """The scalar field cannot carry this operation (exact-only routine
    handed floating scalars, or a numeric routine handed a field with no
    complex embedding)."""


class ZeroPolynomial(PcanonError):
    """The zero polynomial was supplied where a nonzero one is required."""


class NonMonic(PcanonError):
    """A monic polynomial was required."""


class DegreeZero(PcanonError):
    """A polynomial of positive degree was required."""


class NonSplitField(PcanonError):
    """The minimal polynomial does not factor into linear terms over the field."""


class HorizonTooSmall(PcanonError):
    """Not enough sequence values to decide the dimension being measured."""


class CharPositive(PcanonError):
    """The power-basis form only exists in characteristic zero."""


class NotConjugateSymmetric(PcanonError):
    """The spectrum or its coefficients are not closed under conjugation."""


class OrderTooLarge(PcanonError):
    """The assembled matrix would exceed the supported order."""


class EmptyInput(PcanonError):
    """At least one operand is required."""


class AnnihilatorMismatch(PcanonError):
    """The claimed recurrence does not annihilate the constructed sequence."""


class InsufficientData(PcanonError):
    """The prefix is too short to pin down a minimal recurrence."""


class SingularMatrix(PcanonError):
    """The matrix is singular where an invertible one is required."""


class PrincipalUndefined(PcanonError):
    """An eigenvalue sits on the closed negative real axis (or at zero)."""


class ZeroLogClash(PcanonError):
    """Two distinct eigenvalues were mapped to the same logarithm."""


class NotReal(PcanonError):
    """A real matrix (or real-representable form) was required."""


class ParseError(PcanonError):
    """Malformed input document or inline payload."""


__all__ = [
    "PcanonError",
    "MixedFields",
    "NumericFieldUnsupported",
    "ZeroPolynomial",
    "NonMonic",
    "DegreeZero",
    "NonSplitField",
    "HorizonTooSmall",
    "CharPositive",
    "NotConjugateSymmetric",
    "OrderTooLarge",
    "EmptyInput",
    "AnnihilatorMismatch",
    "InsufficientData",
    "SingularMatrix",
    "PrincipalUndefined",
    "ZeroLogClash",
    "NotReal",
    "ParseError",
]
