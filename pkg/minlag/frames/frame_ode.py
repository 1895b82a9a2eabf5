"""
DPW step 1: the holomorphic frame Phi with dPhi = Phi xi and Phi(z0) = Id.

Phi is integrated simultaneously at all lambda samples of the potential. Constant potentials are exponentiated
exactly; everything else goes through a classical Runge-Kutta scheme with step doubling, whose two estimates also
give the Richardson corrected value that is kept.
"""
import logging
from typing import Sequence

import numpy as np

from ..algebra.matrices import det2, mat_exp
from ..loops.laurent import SampledLoop
from ..potentials import Potential
from ..utils.errors import StepUnderflow
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

H_MIN = 1e-8
H_START = 0.05
MAX_GROWTH = 2.0


def _rk4_step(potential, lam, values, z, delta, h):
    """One step of size h (in the segment parameter) for dP/ds = P xi(z + s delta) delta."""

    def rhs(s, p):
        return p @ (potential.coefficient(z + s * delta, lam) * delta)

    k1 = rhs(0.0, values)
    k2 = rhs(h / 2, values + h / 2 * k1)
    k3 = rhs(h / 2, values + h / 2 * k2)
    k4 = rhs(h, values + h * k3)
    return values + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def _segment(potential, lam, values, z_start, z_end, tolerances, h_min):
    delta = z_end - z_start
    s, h = 0.0, min(1.0, H_START / max(abs(delta), H_START))
    steps = 0
    while s < 1.0 - 1e-12:
        h = min(h, 1.0 - s)
        z = z_start + s * delta
        single = _rk4_step(potential, lam, values, z, delta, h)
        half = _rk4_step(potential, lam, values, z, delta, h / 2)
        double = _rk4_step(potential, lam, half, z + h / 2 * delta, delta, h / 2)
        error = float(np.max(np.abs(double - single))) / 15
        scale = max(1.0, float(np.max(np.abs(double))))
        if error <= tolerances.ode * scale:
            values = double + (double - single) / 15
            s += h
            steps += 1
        if error == 0:
            factor = MAX_GROWTH
        else:
            factor = min(MAX_GROWTH, 0.9 * (tolerances.ode * scale / error) ** 0.2)
        h *= max(factor, 0.1)
        if h * abs(delta) < h_min and s < 1.0 - 1e-12:
            raise StepUnderflow(f"step size fell below {h_min:g} at z = {z_start + s * delta:.6g}")
    logger.debug("segment %s -> %s integrated in %d steps", z_start, z_end, steps)
    return values


def _normalized(values):
    # tr xi = 0 keeps det Phi = 1; remove the accumulated drift
    return values / np.sqrt(det2(values))[..., np.newaxis, np.newaxis]


def propagate(
    potential: Potential,
    start: SampledLoop,
    z_start: complex,
    z_end: complex,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    h_min: float = H_MIN,
) -> SampledLoop:
    """
    Continues a solution of dPhi = Phi xi along the straight segment z_start -> z_end.
    Since Phi(z_start) P solves the same equation as Phi, only P with P(z_start) = Id is integrated.
    """
    lam = potential.lambdas()
    if z_end == z_start:
        return start
    if potential.constant:
        step = mat_exp((z_end - z_start) * potential.matrix(lam))
    else:
        identity = np.tile(np.eye(2, dtype=complex), (lam.size, 1, 1))
        step = _segment(potential, lam, identity, complex(z_start), complex(z_end), tolerances, h_min)
    return SampledLoop(_normalized(start.values @ step))


def solve_frame_ode(
    potential: Potential,
    z0: complex,
    path: Sequence[complex],
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    h_min: float = H_MIN,
) -> SampledLoop:
    """
    Phi at the end of the polyline z0 -> path[0] -> path[1] -> ..., with Phi(z0) = Id.

    >>> from minlag.potentials import DiagonalPotential
    >>> phi = solve_frame_ode(DiagonalPotential(samples=8, order=2), 0, [0.5])
    >>> assert np.allclose(phi.values[:, 0, 1], 0.5 / phi.lambdas)
    """
    values = SampledLoop.identity(potential.samples)
    z = complex(z0)
    for point in path:
        values = propagate(potential, values, z, complex(point), tolerances, h_min)
        z = complex(point)
    return values
