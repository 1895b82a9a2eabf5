import numpy as np
from pydantic.types import constr

from ._base import Potential, loop_matrix


class DiagonalPotential(Potential):
    """
    The nilpotent potential xi = lambda^{-1} [[0, 1], [0, 0]] dz of the diagonal surfaces.

    Phi = [[1, z / lambda], [0, 1]] and the extended frame is known in closed form,
    F = (1 - |z|^2)^{-1/2} [[1, z / lambda], [conj(z) lambda, 1]] on the unit disk.

    >>> xi = DiagonalPotential()
    >>> assert np.allclose(xi.matrix(1.0), [[0, 1], [0, 0]])
    """

    kind: constr(regex="^diagonal$") = "diagonal"

    @property
    def constant(self):
        return True

    def coefficient(self, z, lam):
        lam = np.asarray(lam, dtype=complex)
        return loop_matrix(lam, upper=1 / lam)
