from typing import NamedTuple

import numpy as np
from pydantic import conint, validator
from pydantic.types import constr

from ._base import Potential, loop_matrix
from ..algebra.psi import rotation_block
from ..utils.pydantic_base_model import ComplexValue

UNIT_CIRCLE_TOLERANCE = 1e-12


class SmythPotential(Potential):
    """
    The radially symmetric potential xi = lambda^{-1} [[0, 1], [c z^k, 0]] dz with c off the unit circle and nonzero.

    Its surfaces have a (k + 2)-fold symmetry about z = 0, see `smyth_rotation`.
    The frame has no closed form and is obtained from the frame ODE and the numerical Iwasawa factorization.
    """

    kind: constr(regex="^smyth$") = "smyth"
    c: ComplexValue
    k: conint(ge=1)

    @validator("c")
    def off_unit_circle(cls, v):
        if abs(v) < UNIT_CIRCLE_TOLERANCE or abs(abs(v) - 1) < UNIT_CIRCLE_TOLERANCE:
            raise ValueError("c must not lie on the unit circle or be zero")
        return v

    def coefficient(self, z, lam):
        lam = np.asarray(lam, dtype=complex)
        return loop_matrix(lam, upper=1 / lam, lower=self.c * complex(z) ** self.k / lam)


class SmythSymmetry(NamedTuple):
    rotation: complex
    conjugator: np.ndarray
    lift_map: np.ndarray

    def reflect(self, z):
        """R_l(z) = e^{2 pi i l / (k + 2)} conj(z)."""
        return self.rotation * np.conj(z)


def smyth_rotation(k: int, l: int) -> SmythSymmetry:
    """
    The symmetry data of the radially symmetric potential with exponent k.

    With eps = e^{2 pi i l / (k + 2)} and A_l = diag(e^{pi i l / (k + 2)}, e^{-pi i l / (k + 2)}) one has
    xi(eps w) = A_l xi(w) A_l^{-1}, hence F(R_l(z)) = A_l F(conj z) A_l^{-1} for frames based at 0, and the lift moves
    by psi(A_l, A_l) = diag(Id, rotation by 2 pi l / (k + 2)).

    >>> symmetry = smyth_rotation(1, 0)
    >>> assert np.allclose(symmetry.lift_map, np.eye(4))
    """
    angle = np.pi * l / (k + 2)
    conjugator = np.diag([np.exp(1j * angle), np.exp(-1j * angle)])
    return SmythSymmetry(np.exp(2j * angle), conjugator, rotation_block(2 * angle))
