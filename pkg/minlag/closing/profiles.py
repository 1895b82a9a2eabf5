"""
Profile curves of catenoid-type surfaces in the Poincare disk.

With P1, P2 diagonalizing A(lambda0), A(i lambda0), the maps phi^ = Ad(P1^-1) phi and psi^ = Ad(P2^-1) psi turn the
translations z -> z + i theta into rotations of the disk: w1 -> e^{-2 i mu1 theta} w1 and w2 -> e^{-2 i mu2 theta} w2,
where |mu1| = m / 2 and |mu2| = n / 2.
"""
import logging
from typing import NamedTuple, Sequence

import numpy as np

from .monodromy import diagonalize_su11
from .params import ClosingParams
from ..algebra.hyperbolic import project_to_disk, su11_coordinates, vertex_image
from ..frames.explicit import equivariant_frame
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)


class ProfileCurves(NamedTuple):
    x: np.ndarray
    y: float
    w1: np.ndarray
    w2: np.ndarray
    mu1: float
    mu2: float

    def rotated(self, theta):
        """The curves predicted at y + theta."""
        return np.exp(-2j * self.mu1 * theta) * self.w1, np.exp(-2j * self.mu2 * theta) * self.w2


def profile_curves(
    params: ClosingParams, x_samples: Sequence[float], y: float, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> ProfileCurves:
    """w1(x) and w2(x) at the points x + iy; raises OutOfInterval for x outside the profile interval."""
    x_samples = np.asarray(x_samples, dtype=float)
    params.profile.require(x_samples)
    first = diagonalize_su11(params.matrix(params.lambda0), tolerances)
    second = diagonalize_su11(params.matrix(1j * params.lambda0), tolerances)
    p1, p1_inverse = first.conjugator.m, first.conjugator.inverse().m
    p2, p2_inverse = second.conjugator.m, second.conjugator.inverse().m
    lambdas = np.array([params.lambda0, 1j * params.lambda0])

    w1 = np.empty(x_samples.shape, dtype=complex)
    w2 = np.empty(x_samples.shape, dtype=complex)
    for index, x in enumerate(x_samples):
        frames = equivariant_frame(params.profile, float(x), y, lambdas, tolerances)
        phi, psi = vertex_image(frames[0]), vertex_image(frames[1])
        w1[index] = project_to_disk(su11_coordinates(p1_inverse @ phi @ p1))
        w2[index] = project_to_disk(su11_coordinates(p2_inverse @ psi @ p2))
    logger.debug("profile curves at y = %g on %d samples", y, x_samples.size)
    return ProfileCurves(x_samples, float(y), w1, w2, first.mu, second.mu)


def rotation_law_residual(
    params: ClosingParams,
    x_samples: Sequence[float],
    y: float,
    thetas: Sequence[float] = (0.3, 1.0),
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """max |w(y + theta) - e^{-2 i mu theta} w(y)| over both curves, all samples and all thetas."""
    base = profile_curves(params, x_samples, y, tolerances)
    worst = 0.0
    for theta in thetas:
        moved = profile_curves(params, x_samples, y + theta, tolerances)
        expected_w1, expected_w2 = base.rotated(theta)
        worst = max(worst, float(np.max(np.abs(moved.w1 - expected_w1))), float(np.max(np.abs(moved.w2 - expected_w2))))
    logger.info("rotation law residual %.3g over %d shifts", worst, len(thetas))
    return worst
