"""Exceptions raised by kacmoody.

Every exception carries an `exit_code`, which the command line interface
returns when the exception escapes a job. Codes are unique per class so
that scripts can tell failures apart without parsing messages.
"""


class KacMoodyError(Exception):
    """Base class for all domain errors."""
    exit_code = 10


class ParseError(KacMoodyError, ValueError):
    """A matrix file or literal could not be read."""
    exit_code = 11


class CartanAxiomError(KacMoodyError, ValueError):
    """A square integer matrix violates one of the Cartan axioms.

    Attributes:
        `position` (`tuple[int, int]`): The 0-based (row, column) of the
            offending entry. Messages report it 1-based.
    """
    exit_code = 12

    def __init__(self, message: str, position: tuple[int, int]):
        super().__init__(message)
        self.position = position


class DiagonalNotTwo(CartanAxiomError):
    exit_code = 13


class PositiveOffDiagonal(CartanAxiomError):
    exit_code = 14


class ZeroAsymmetry(CartanAxiomError):
    exit_code = 15


class EmptyIndexSet(KacMoodyError, ValueError):
    exit_code = 16


class IndexOutOfRange(KacMoodyError, IndexError):
    exit_code = 17


class DimensionMismatch(KacMoodyError, ValueError):
    exit_code = 18


class NotDominant(KacMoodyError, ValueError):
    exit_code = 19


class NotHomogeneous(KacMoodyError, ValueError):
    exit_code = 20


class NotInvariant(KacMoodyError, ValueError):
    exit_code = 21


class PreconditionViolated(KacMoodyError, ValueError):
    """An operation was called outside the hypotheses it is stated for."""
    exit_code = 30


class Decomposable(PreconditionViolated):
    exit_code = 31


class NotIndefinite(PreconditionViolated):
    exit_code = 32


class FiniteType(PreconditionViolated):
    exit_code = 33


class NonSymmetrizable(PreconditionViolated):
    exit_code = 34


class RankTooSmall(PreconditionViolated):
    exit_code = 35


class NotACartanMatrix(KacMoodyError, ValueError):
    """A constructed matrix (e.g. a regular subalgebra's) fails the axioms."""
    exit_code = 40


class NegativeGeneratorCount(KacMoodyError, ArithmeticError):
    """Generator extraction produced a negative count."""
    exit_code = 41


class LemmaViolation(KacMoodyError, RuntimeError):
    """A search that a theorem guarantees to succeed came back empty.

    This always indicates a bug, never bad input.
    """
    exit_code = 42


def exit_codes() -> dict[str, int]:
    """Map every error class name to its exit code, in code order."""
    classes = [KacMoodyError, *_all_subclasses(KacMoodyError)]
    return {
        cls.__name__: cls.exit_code
        for cls in sorted(classes, key=lambda c: c.exit_code)
    }


def _all_subclasses(cls):
    for sub in cls.__subclasses__():
        yield sub
        yield from _all_subclasses(sub)
