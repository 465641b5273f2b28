"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class ZeroDivError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(ZeroDivError, ValueError):
    """An input violates an operation's documented precondition."""


# field
class NotSquareFree(PreconditionError):
    pass


class RedundantRadicand(PreconditionError):
    pass


class TowerTooDeep(PreconditionError):
    pass


class TowerMismatch(PreconditionError):
    pass


class DivisionByZero(ZeroDivError, ZeroDivisionError):
    pass


class NegativeRadicand(PreconditionError):
    pass


# linalg
class NonSquare(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class NonSymmetric(PreconditionError):
    pass


class SingularMatrix(PreconditionError):
    pass


# poly
class ArityMismatch(PreconditionError):
    pass


class DegreeTooHigh(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NotHomogeneous(PreconditionError):
    pass


class WrongDegree(PreconditionError):
    pass


# algebra / tameness
class ShapeMismatch(PreconditionError):
    pass


class RequiresAAFull(PreconditionError):
    pass


class DimensionTooLarge(PreconditionError):
    pass


class NotAssociative(PreconditionError):
    pass


class TamenessContradiction(ZeroDivError, AssertionError):
    """A 3-dimensional associative algebra came out non-tame: an internal bug."""


# file format
class ParseError(PreconditionError):
    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"line {line}, col {col}: {message}")


class UnknownBasisName(ParseError):
    pass


class DuplicateProduct(ParseError):
    pass


class CoefficientNotInTower(ParseError):
    pass
