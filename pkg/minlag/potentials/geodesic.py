import numpy as np
from pydantic.types import constr

from ._base import Potential, loop_matrix


class GeodesicProductPotential(Potential):
    """
    xi = lambda^{-1} [[0, 1], [1, 0]] dz, whose surfaces are products of geodesics in H^2 x H^2.

    The extended frame is exp((z / lambda + conj(z) lambda) sigma1).
    """

    kind: constr(regex="^geodesicProduct$") = "geodesicProduct"

    @property
    def constant(self):
        return True

    def coefficient(self, z, lam):
        lam = np.asarray(lam, dtype=complex)
        return loop_matrix(lam, upper=1 / lam, lower=1 / lam)
