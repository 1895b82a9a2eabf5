import abc

import numpy as np
from pydantic import conint, validator

from ..loops.laurent import roots_of_unity
from ..utils.pydantic_base_model import CamelBaseModel


class Potential(CamelBaseModel, abc.ABC):
    """
    A holomorphic DPW potential xi = xi(z, lambda) dz with values in the twisted loop algebra of sl(2, C):
    odd powers of lambda sit off the diagonal and even powers on it.

    `order` is the truncation order N of the loops built from this potential and `samples` the number M of
    lambda samples on the unit circle; M has to be a multiple of 4 so that lambda -> i lambda is an index shift.
    """

    order: conint(ge=1) = 16
    samples: conint(ge=4) = 64

    @validator("samples")
    def samples_fit_order(cls, v, values):
        if v % 4 != 0:
            raise ValueError("samples must be a multiple of 4")
        order = values.get("order")
        if order is not None and 2 * order + 1 > v:
            raise ValueError("2 * order + 1 must not exceed samples")
        return v

    @property
    def constant(self):
        """True if xi does not depend on z, in which case Phi = exp(z A(lambda))."""
        return False

    @abc.abstractmethod
    def coefficient(self, z, lam):
        """
        xi(z, lambda) / dz at a single point z for an array of lambdas.
        Returns an array of shape lam.shape + (2, 2).
        """

    def matrix(self, lam):
        """A(lambda) of a constant potential."""
        if not self.constant:
            raise TypeError(f"{type(self).__name__} depends on z")
        return self.coefficient(0.0, lam)

    def lambdas(self):
        return roots_of_unity(self.samples)


def loop_matrix(lam, d=0.0, upper=0.0, lower=0.0):
    """[[d, upper], [lower, -d]] broadcast over lambda."""
    lam = np.asarray(lam, dtype=complex)
    out = np.zeros(lam.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = d
    out[..., 1, 1] = -np.asarray(d)
    out[..., 0, 1] = upper
    out[..., 1, 0] = lower
    return out
