"""
Maurer-Cartan forms of a minimal Lagrangian surface in terms of (uhat, alphahat), and their flatness.

The 4x4 pair belongs to the SO0(2,2) frame gauged by the rotation through arg r - theta; the 2x2 pair is the SU(1,1)
form of F_lambda, its companion for F_{i lambda} is the same matrices at i lambda. Both are flat for every lambda on
the unit circle iff alphahat is holomorphic and uhat solves the elliptic sinh-Gordon equation.
"""
import logging
from typing import Mapping, Tuple

import numpy as np

from ._residuals import normalized, require_resolution, scale_of
from .report import ResidualReport
from ..utils.differences import d_z, d_zbar
from ..utils.errors import InvalidInput
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

SQRT2 = np.sqrt(2.0)
MIN_LAMBDAS = 3
DISTINCT = 1e-12


def _broadcast(uhat, uhat_z, alphahat):
    uhat = np.asarray(uhat, dtype=float)
    uhat_z = np.asarray(uhat_z, dtype=complex)
    alphahat = np.asarray(alphahat, dtype=complex)
    return np.broadcast_arrays(uhat, uhat_z, alphahat)


def tilde_maurer_cartan(uhat, uhat_z, alphahat, lam):
    """
    (U~, V~) on arrays of (uhat, uhat_z, alphahat); uhat is real, so uhat_zbar = conj(uhat_z).

    >>> u_tilde, v_tilde = tilde_maurer_cartan(0.0, 0.0, 0.0, 1.0)
    >>> assert np.allclose(np.abs(u_tilde[u_tilde != 0]), 2 ** -0.5)
    """
    uhat, uhat_z, alphahat = _broadcast(uhat, uhat_z, alphahat)
    lam = complex(lam)
    e = np.exp(uhat / 2)
    lower = alphahat / (lam * lam * e)
    upper = lam * lam * np.conj(alphahat) / e
    rotation_z = uhat_z / SQRT2
    rotation_zbar = np.conj(uhat_z) / SQRT2

    u_matrix = np.zeros(uhat.shape + (4, 4), dtype=complex)
    u_matrix[..., 0, 2] = u_matrix[..., 2, 0] = -e
    u_matrix[..., 0, 3] = u_matrix[..., 3, 0] = -1j * e
    u_matrix[..., 1, 2] = u_matrix[..., 2, 1] = 1j * lower
    u_matrix[..., 1, 3] = u_matrix[..., 3, 1] = lower
    u_matrix[..., 2, 3] = -1j * rotation_z
    u_matrix[..., 3, 2] = 1j * rotation_z

    v_matrix = np.zeros(uhat.shape + (4, 4), dtype=complex)
    v_matrix[..., 0, 2] = v_matrix[..., 2, 0] = -e
    v_matrix[..., 0, 3] = v_matrix[..., 3, 0] = 1j * e
    v_matrix[..., 1, 2] = v_matrix[..., 2, 1] = -1j * upper
    v_matrix[..., 1, 3] = v_matrix[..., 3, 1] = upper
    v_matrix[..., 2, 3] = 1j * rotation_zbar
    v_matrix[..., 3, 2] = -1j * rotation_zbar
    return u_matrix / SQRT2, v_matrix / SQRT2


def hat_maurer_cartan(uhat, uhat_z, alphahat, lam):
    """
    (U^_1, V^_1) of F_lambda:

        U = [[uhat_z / 4, -i lambda^-1 e^{uhat/2} / sqrt2], [i lambda^-1 alphahat e^{-uhat/2} / sqrt2, -uhat_z / 4]]
        V = [[-uhat_zbar / 4, -i lambda conj(alphahat) e^{-uhat/2} / sqrt2], [i lambda e^{uhat/2} / sqrt2, uhat_zbar / 4]]

    Evaluated at i lambda this is the pair of F_{i lambda}.
    """
    uhat, uhat_z, alphahat = _broadcast(uhat, uhat_z, alphahat)
    lam = complex(lam)
    e = np.exp(uhat / 2)
    u_matrix = np.empty(uhat.shape + (2, 2), dtype=complex)
    u_matrix[..., 0, 0] = uhat_z / 4
    u_matrix[..., 1, 1] = -uhat_z / 4
    u_matrix[..., 0, 1] = -1j * e / (SQRT2 * lam)
    u_matrix[..., 1, 0] = 1j * alphahat / (SQRT2 * lam * e)
    v_matrix = np.empty(uhat.shape + (2, 2), dtype=complex)
    v_matrix[..., 0, 0] = -np.conj(uhat_z) / 4
    v_matrix[..., 1, 1] = np.conj(uhat_z) / 4
    v_matrix[..., 0, 1] = -1j * lam * np.conj(alphahat) / (SQRT2 * e)
    v_matrix[..., 1, 0] = 1j * lam * e / SQRT2
    return u_matrix, v_matrix


def connection_grids(uhat, alphahat, h, lambdas, kind="hat") -> Mapping[complex, Tuple[np.ndarray, np.ndarray]]:
    """{lambda: (U, V)} on a grid of (uhat, alphahat), uhat_z by central differences."""
    builders = {"hat": hat_maurer_cartan, "tilde": tilde_maurer_cartan}
    if kind not in builders:
        raise InvalidInput(f"unknown connection kind {kind!r}, expected one of {sorted(builders)}")
    uhat_z = d_z(uhat, h)
    return {complex(lam): builders[kind](uhat, uhat_z, alphahat, lam) for lam in lambdas}


def _distinct(lambdas):
    unique = []
    for lam in lambdas:
        if all(abs(lam - other) > DISTINCT for other in unique):
            unique.append(lam)
    return unique


def check_flatness(
    connections: Mapping[complex, Tuple[np.ndarray, np.ndarray]], h, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> ResidualReport:
    """
    sup |U_zbar - V_z - [U, V]| for every lambda, relative to the size of the connection.
    """
    if len(_distinct(list(connections))) < MIN_LAMBDAS:
        raise InvalidInput(f"flatness needs at least {MIN_LAMBDAS} distinct lambda samples")
    report = ResidualReport(context={"lambdas": [[lam.real, lam.imag] for lam in connections]})
    for lam, (u_matrix, v_matrix) in connections.items():
        u_matrix = np.asarray(u_matrix, dtype=complex)
        v_matrix = np.asarray(v_matrix, dtype=complex)
        if u_matrix.shape != v_matrix.shape:
            raise InvalidInput(f"U and V grids differ in shape: {u_matrix.shape} vs {v_matrix.shape}")
        scale = scale_of(u_matrix, v_matrix) ** 2
        require_resolution(u_matrix, h, tolerances.fd, scale_of(u_matrix), name="U")
        require_resolution(v_matrix, h, tolerances.fd, scale_of(v_matrix), name="V")
        curvature = d_zbar(u_matrix, h) - d_z(v_matrix, h) - (u_matrix @ v_matrix - v_matrix @ u_matrix)
        report.add(f"flatness[arg lambda={np.angle(lam):.6f}]", normalized(curvature, scale), tolerances.fd)
    logger.debug("flatness checked at %d lambda values", len(connections))
    return report
