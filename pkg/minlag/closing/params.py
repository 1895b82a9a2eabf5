"""
Closing conditions of the R-equivariant potential.

On the unit circle A(lambda) = [[c, w], [-conj(w), -c]] with w = a / lambda + b lambda, so exp(2 pi i A(lambda)) = +-Id
iff 2 sqrt(c^2 - |w|^2) is an integer. Asking for m at lambda0 and n at i lambda0 and using
|lambda0 a +- b / lambda0|^2 = a^2 + b^2 +- 2ab Re(lambda0^2) fixes

    b = (n^2 - m^2) / (16 a Re(lambda0^2)),   c = +- sqrt(a^2 + b^2 + (m^2 + n^2) / 8).
"""
import logging
import math

import numpy as np
from pydantic import PositiveInt, root_validator

from ..elliptic import EllipticProfile, v_profile
from ..potentials import EquivariantPotential
from ..utils.errors import DegenerateLambda0, InvalidInput, ZeroB
from ..utils.pydantic_base_model import ComplexValue, FrozenCamelModel
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)


def closing_number(a, b, c, lam):
    """2 sqrt(c^2 - |lambda a + b / lambda|^2); NaN if the axis of A(lambda) is not timelike."""
    lam = complex(lam)
    radicand = c * c - abs(lam * a + b / lam) ** 2
    return 2 * math.sqrt(radicand) if radicand >= 0 else math.nan


class ClosingParams(FrozenCamelModel):
    m: PositiveInt
    n: PositiveInt
    lambda0: ComplexValue
    a: float
    b: float
    c: float
    profile: EllipticProfile

    @root_validator(skip_on_failure=True)
    def closes(cls, values):
        m, n = values["m"], values["n"]
        a, b, c, lambda0 = values["a"], values["b"], values["c"], values["lambda0"]
        residual_m = abs(closing_number(a, b, c, lambda0) - m)
        residual_n = abs(closing_number(a, b, c, 1j * lambda0) - n)
        tolerance = DEFAULT_TOLERANCES.close * max(1.0, m, n)
        if not residual_m < tolerance or not residual_n < tolerance:
            raise ValueError(f"(a, b, c) = ({a}, {b}, {c}) does not close with (m, n) = ({m}, {n})")
        return values

    def closing_residuals(self):
        """|2 sqrt(c^2 - |lambda0 a + b / lambda0|^2) - m| and the same at i lambda0 against n."""
        return (
            abs(closing_number(self.a, self.b, self.c, self.lambda0) - self.m),
            abs(closing_number(self.a, self.b, self.c, 1j * self.lambda0) - self.n),
        )

    def potential(self, samples: int = 64, order: int = 16) -> EquivariantPotential:
        return EquivariantPotential(a=self.a, b=self.b, c=self.c, samples=samples, order=order)

    def matrix(self, lam):
        """A(lambda) at a single spectral parameter."""
        return self.potential(samples=4, order=1).matrix(complex(lam))


def solve_closing(
    m: int, n: int, lambda0: complex, a: float, sign_c: int = -1, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> ClosingParams:
    """
    The parameters (b, c) for which the equivariant surfaces close up with winding numbers m at lambda0 and
    n at i lambda0.

    >>> params = solve_closing(4, 8, np.exp(1j * np.pi / 6), 1.0)
    >>> assert abs(params.b - 6) < 1e-12 and abs(params.c ** 2 - 47) < 1e-12
    """
    lambda0 = complex(lambda0)
    if abs(abs(lambda0) - 1) > tolerances.alg:
        raise InvalidInput(f"lambda0 = {lambda0} does not lie on the unit circle")
    if a == 0:
        raise InvalidInput("a must be nonzero")
    if sign_c not in (-1, 1):
        raise InvalidInput("sign_c is -1 or 1")
    real_part = (lambda0 * lambda0).real
    if abs(real_part) < tolerances.alg:
        raise DegenerateLambda0(f"Re(lambda0^2) vanishes for lambda0 = {lambda0}")
    if m == n:
        raise ZeroB(f"m = n = {m} forces b = 0")

    b = (n * n - m * m) / (16 * a * real_part)
    c = sign_c * math.sqrt(a * a + b * b + (m * m + n * n) / 8)
    logger.info("closing (m, n) = (%d, %d) at lambda0 = %s: b = %.12g, c = %.12g", m, n, lambda0, b, c)
    profile = v_profile(a, b, c, tolerances)
    return ClosingParams(m=m, n=n, lambda0=lambda0, a=a, b=b, c=c, profile=profile)
