"""
DPW steps 3 and 4: the surface of a frame pair (F_lambda, F_{i lambda}) in the three models.

    lift  = coordinates of F_lambda diag(0, 2) F_{i lambda}^{-1}         (Q2*, projective)
    phi   = i F_lambda sigma3 F_lambda^{-1},  psi = i F_{i lambda} sigma3 F_{i lambda}^{-1}    (H^2 x H^2)
    fmax  = coordinates of F_lambda diag(e^{-i pi/4}, e^{i pi/4}) F_{i lambda}^{-1}            (AdS3)
    N     = coordinates of F_lambda diag(e^{i pi/4}, e^{-i pi/4}) F_{i lambda}^{-1}

with coordinates (Re W11, Im W11, Re W21, Im W21) extended complex-linearly, so that the lift is X + iY for
X = F_lambda F_{i lambda}^{-1} and Y = i F_lambda sigma3 F_{i lambda}^{-1}, and fmax + i N = e^{i pi / 4} lift.
"""
import logging

import numpy as np

from .models import FrameInvariants, SurfaceGrid
from ..algebra.hyperbolic import Su11Vector, su11_coordinates, vertex_image
from ..algebra.matrices import inv2
from ..algebra.psi import matrix_coordinates
from ..frames.extended_frame import FramePair
from ..utils.errors import InvalidInput

logger = logging.getLogger(__name__)

LIFT_WEIGHT = np.diag([0.0, 2.0]).astype(complex)
ADS_WEIGHT = np.diag([np.exp(-0.25j * np.pi), np.exp(0.25j * np.pi)])
NORMAL_WEIGHT = np.diag([np.exp(0.25j * np.pi), np.exp(-0.25j * np.pi)])


def lift_from_frames(f_lam, f_ilam):
    """The Q2* lift of (stacked) frame pairs, shape (..., 4)."""
    with np.errstate(invalid="ignore"):
        return matrix_coordinates(f_lam @ LIFT_WEIGHT @ inv2(f_ilam))


def ads3_from_frames(f_lam, f_ilam):
    with np.errstate(invalid="ignore"):
        inverse = inv2(f_ilam)
        fmax = matrix_coordinates(f_lam @ ADS_WEIGHT @ inverse).real
        normal = matrix_coordinates(f_lam @ NORMAL_WEIGHT @ inverse).real
    return fmax, normal


def _pair(frames: FramePair, z, lam):
    lam = complex(lam)
    return frames.F_at(z, lam), frames.F_at(z, 1j * lam)


def surface_q2(frames: FramePair, z, lam):
    """
    The lift of f^lambda(z) to C^4_2; a null vector with negative Hermitian norm.

    >>> from minlag.frames import Grid, geodesic_frame_pair
    >>> frames = geodesic_frame_pair(Grid(x_min=-0.1, x_max=0.1, y_min=-0.1, y_max=0.1, steps=8), samples=8)
    >>> assert np.allclose(surface_q2(frames, 0, 1), [1, 1j, 0, 0])
    """
    return lift_from_frames(*_pair(frames, z, lam))


def surface_h2xh2(frames: FramePair, z, lam):
    f_lam, f_ilam = _pair(frames, z, lam)
    return Su11Vector.from_matrix(vertex_image(f_lam)), Su11Vector.from_matrix(vertex_image(f_ilam))


def surface_ads3(frames: FramePair, z, lam):
    """The spacelike maximal surface fmax in AdS3 and its unit normal N, as vectors of R^4_2."""
    return ads3_from_frames(*_pair(frames, z, lam))


def _lambda_minus_one(potential, z):
    """xi_{-1}(z), the coefficient of lambda^{-1} of the potential."""
    lam = potential.lambdas()
    return np.mean(potential.coefficient(z, lam) * lam[:, np.newaxis, np.newaxis], axis=0)


def frame_invariants(frames: FramePair, lam) -> FrameInvariants:
    """
    e^u, alpha, beta and the hatted invariants from U_{-1} = [[0, x], [y, 0]], x = rho^2 xi12, y = rho^{-2} xi21:

        e^u = |x|^2 + |y|^2,  alpha = 2i lambda^-2 x y,  beta = -i (|x|^2 - |y|^2),
        e^uhat = 2|x|^2,  alphahat = -2 lambda^-2 x y,  betahat = | |x|^2 - |y|^2 |.
    """
    if frames.potential is None:
        raise InvalidInput("frame invariants need the potential of the frames")
    lam = complex(lam)
    points = frames.grid.points()
    x = np.full(frames.grid.shape, np.nan, dtype=complex)
    y = np.full(frames.grid.shape, np.nan, dtype=complex)
    for index in np.ndindex(*frames.grid.shape):
        if frames.is_hole(*index):
            continue
        xi = _lambda_minus_one(frames.potential, points[index])
        rho2 = frames.rho[index] ** 2
        x[index] = rho2 * xi[0, 1]
        y[index] = xi[1, 0] / rho2
    x2, y2 = np.abs(x) ** 2, np.abs(y) ** 2
    return FrameInvariants(
        e_u=x2 + y2,
        alpha=2j * x * y / lam ** 2,
        beta=-1j * (x2 - y2),
        e_uhat=2 * x2,
        alphahat=-2 * x * y / lam ** 2,
        betahat=np.abs(x2 - y2),
    )


def surface_grid(frames: FramePair, lam) -> SurfaceGrid:
    """f^lambda on all nodes of the frame grid."""
    lam = complex(lam)
    f_lam, f_ilam = frames.at(lam)
    fmax, normal = ads3_from_frames(f_lam, f_ilam)
    surface = SurfaceGrid(
        grid=frames.grid,
        lam=lam,
        lift=lift_from_frames(f_lam, f_ilam),
        phi=su11_coordinates(vertex_image(f_lam)),
        psi=su11_coordinates(vertex_image(f_ilam)),
        fmax=fmax,
        normal=normal,
        invariants=frame_invariants(frames, lam),
        holes=frames.holes,
    )
    logger.debug("surface at lambda = %s on %d x %d nodes", lam, *frames.grid.shape)
    return surface
