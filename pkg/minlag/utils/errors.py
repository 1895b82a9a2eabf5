"""
Exceptions raised by minlag.

All of them derive from `MinlagError`, which itself is a `ValueError`.
Raised inside a pydantic validator they therefore surface as a `ValidationError`,
and callers that only care about "bad input" can keep catching `ValueError`.
"""

from contextlib import contextmanager


class MinlagError(ValueError):
    """Base class of every error raised by this package."""


class InvalidInput(MinlagError):
    """A group element or vector does not satisfy its defining equations."""


class NotOnHyperboloid(MinlagError):
    pass


class WrongSheet(MinlagError):
    pass


class Overflow(MinlagError):
    pass


class SizeMismatch(MinlagError):
    pass


class SingularSample(MinlagError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"loop is singular at sample {index}")


class OutsideBigCell(MinlagError):
    """The loop left the open cell on which the Iwasawa (or Birkhoff) factorization exists."""


class StepUnderflow(MinlagError):
    pass


class OutOfInterval(MinlagError):
    pass


class BranchCut(MinlagError):
    pass


class NoConvergence(MinlagError):
    pass


class DegenerateDiscriminant(MinlagError):
    pass


class FrameHole(MinlagError):
    """The extended frame is undefined at the requested point (factorization failed there)."""


class NotHorizontal(MinlagError):
    pass


class DomainError(MinlagError):
    pass


class DegenerateFrame(MinlagError):
    pass


class GridTooCoarse(MinlagError):
    pass


class DegenerateLambda0(MinlagError):
    pass


class ZeroB(MinlagError):
    pass


class NotElliptic(MinlagError):
    pass


@contextmanager
def solver_failures(stage: str):
    """
    Numerical errors of numpy and scipy raised inside the block come out as `NoConvergence`.

    >>> try:
    ...     with solver_failures("inversion"):
    ...         raise ZeroDivisionError("division by zero")
    ... except NoConvergence as error:
    ...     print(error)
    inversion: division by zero
    """
    try:
        yield
    except MinlagError:
        raise
    except (ValueError, ArithmeticError) as error:
        raise NoConvergence(f"{stage}: {error}") from error
