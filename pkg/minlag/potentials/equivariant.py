import numpy as np
from pydantic import validator
from pydantic.types import constr

from ._base import Potential, loop_matrix


class EquivariantPotential(Potential):
    """
    The R-equivariant potential xi = A(lambda) dz with

        A(lambda) = [[c, a / lambda + b lambda], [-a lambda - b / lambda, -c]],  a, b real and nonzero, c real.

    Translations z -> z + i theta act on the frame by exp(i theta A(lambda)), which is SU(1,1) valued on the circle.

    >>> xi = EquivariantPotential(a=1, b=6, c=-47 ** 0.5)
    >>> assert np.allclose(xi.matrix(1.0), [[-47 ** 0.5, 7], [-7, 47 ** 0.5]])
    """

    kind: constr(regex="^equivariant$") = "equivariant"
    a: float
    b: float
    c: float = 0.0

    @validator("a", "b")
    def nonzero(cls, v, field):
        if v == 0:
            raise ValueError(f"{field.name} must be nonzero")
        return v

    @property
    def constant(self):
        return True

    def coefficient(self, z, lam):
        lam = np.asarray(lam, dtype=complex)
        return loop_matrix(lam, d=self.c, upper=self.a / lam + self.b * lam, lower=-self.a * lam - self.b / lam)

    def determinant(self, lam):
        """det A(lambda) = |a lambda + b / lambda|^2 - c^2 on the unit circle."""
        lam = np.asarray(lam, dtype=complex)
        return -self.c ** 2 + (self.a / lam + self.b * lam) * (self.a * lam + self.b / lam)
