"""
su(1,1) as Minkowski three-space and the hyperbolic plane inside it.

A vector (x1, x2, x3) corresponds to the matrix [[i x1, x2 + i x3], [x2 - i x3, -i x1]]; the Lorentzian product is
<X, Y> = trace(XY) / 2, so that <X, X> = -x1^2 + x2^2 + x3^2. H^2 is the upper sheet <X, X> = -1, x1 > 0.
"""
import numpy as np
from pydantic import BaseModel

from .matrices import SIGMA2, SIGMA3
from ..utils.errors import NotOnHyperboloid, WrongSheet
from ..utils.tolerances import DEFAULT_TOLERANCES


class Su11Vector(BaseModel):
    x1: float
    x2: float
    x3: float

    class Config:
        allow_mutation = False

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m)
        return cls(x1=float(np.imag(m[0, 0])), x2=float(np.real(m[0, 1])), x3=float(np.imag(m[0, 1])))

    def to_matrix(self):
        w = self.x2 + 1j * self.x3
        return np.array([[1j * self.x1, w], [np.conj(w), -1j * self.x1]])

    def as_array(self):
        return np.array([self.x1, self.x2, self.x3])

    def lorentz_norm(self):
        """
        -x1^2 + x2^2 + x3^2, computed through the trace formula -trace(X sigma2 X^T sigma2) / 2.

        >>> assert abs(Su11Vector(x1=2.0, x2=1.0, x3=1.0).lorentz_norm() + 2.0) < 1e-12
        """
        m = self.to_matrix()
        return float(np.real(-0.5 * np.trace(m @ SIGMA2 @ m.T @ SIGMA2)))


def su11_coordinates(m):
    """(x1, x2, x3) of stacked su(1,1) matrices, shape (..., 3)."""
    m = np.asarray(m)
    return np.stack([np.imag(m[..., 0, 0]), np.real(m[..., 0, 1]), np.imag(m[..., 0, 1])], axis=-1)


def lorentz_dot(x, y):
    """-x1 y1 + x2 y2 + x3 y3 along the last axis, for coordinate vectors (complex-bilinear)."""
    x, y = np.asarray(x), np.asarray(y)
    return -x[..., 0] * y[..., 0] + x[..., 1] * y[..., 1] + x[..., 2] * y[..., 2]


def vertex_image(frame):
    """i F sigma3 F^{-1}: the image of the hyperboloid vertex under F in SU(1,1)."""
    frame = np.asarray(frame)
    inverse = SIGMA3 @ np.conj(np.swapaxes(frame, -1, -2)) @ SIGMA3
    return 1j * frame @ SIGMA3 @ inverse


def project_to_disk(coordinates):
    """Vectorized Poincare projection (x2 + i x3) / (1 + x1) without validation."""
    coordinates = np.asarray(coordinates)
    return (coordinates[..., 1] + 1j * coordinates[..., 2]) / (1 + coordinates[..., 0])


def poincare_project(x: Su11Vector, tol=DEFAULT_TOLERANCES.alg) -> complex:
    """
    Projects a point of H^2 to the Poincare disk.

    >>> poincare_project(Su11Vector(x1=1.0, x2=0.0, x3=0.0))
    0j
    >>> s = 1.0
    >>> assert abs(poincare_project(Su11Vector(x1=np.cosh(s), x2=np.sinh(s), x3=0.0)) - np.tanh(s / 2)) < 1e-12
    """
    if x.x1 <= 0:
        raise WrongSheet("point lies on the lower sheet")
    residual = abs(-x.x1 ** 2 + x.x2 ** 2 + x.x3 ** 2 + 1)
    if residual >= tol * max(1.0, x.x1 ** 2):
        raise NotOnHyperboloid(f"Lorentzian norm misses -1 by {residual:.3g}")
    return complex(project_to_disk(x.as_array()))
