"""Exception types shared across the package.

Every error carries its class name so the CLI can report the originating
failure by name.
"""

from __future__ import annotations


class SubsumError(Exception):
    @property
    def name(self) -> str:
        return type(self).__name__


# gf
class NotPrime(SubsumError, ValueError):
    pass


class DegreeOutOfRange(SubsumError, ValueError):
    pass


class OrderTooLarge(SubsumError, ValueError):
    pass


class DivisionByZero(SubsumError, ZeroDivisionError):
    pass


# linalg
class AmbientMismatch(SubsumError, ValueError):
    pass


class AlreadyFull(SubsumError, ValueError):
    pass


# subspace enumeration / counting
class RangeError(SubsumError, ValueError):
    pass


class TooLarge(SubsumError, ValueError):
    pass


class DimensionTooSmall(SubsumError, ValueError):
    pass


# graph solvers
class Disconnected(SubsumError, ValueError):
    pass


class SearchBudgetExceeded(SubsumError, RuntimeError):
    pass


# formulas
class NonIntegerTerm(SubsumError, ArithmeticError):
    def __init__(self, term: str, value) -> None:
        super().__init__(f"{term} = {value} is not an integer")
        self.term = term
        self.value = value


# witnesses
class ParityError(SubsumError, ValueError):
    pass


class ZeroAnchor(SubsumError, ValueError):
    pass


class AlreadyAdjacent(SubsumError, ValueError):
    pass


class WitnessError(SubsumError, AssertionError):
    """A constructed witness failed one of its own verification checks."""
