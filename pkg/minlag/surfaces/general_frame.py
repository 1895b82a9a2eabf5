"""
The SO0(2,2) frame of a conformal Lagrangian surface and the coefficients of its Maurer-Cartan form.

For a horizontal lift f with invariants (u, alpha, beta, phi_min) the frame has the columns

    (f + conj f) / sqrt(2),  -i (f - conj f) / sqrt(2),  (f_z + conj f_z) / sqrt(D),
    -i (f_z (e^u + conj alpha) - conj f_z (e^u + alpha)) / sqrt(D (e^{2u} - |alpha|^2)),     D = 2e^u + alpha + conj alpha,

and U = F^{-1} F_z has the off-diagonal blocks -(p1, p2; p3, p4) and the rotation coefficient q. For minimal
surfaces the coefficients reduce to p, r, qhat of the normalized lift; these stay regular where e^{2u} = |alpha|^2.
"""
from typing import NamedTuple

import numpy as np

from ..utils.differences import d_z, d_zbar
from ..utils.errors import DegenerateFrame
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

SQRT2 = np.sqrt(2.0)


def _require_positive(values, name, tolerances):
    values = np.asarray(values, dtype=float)
    with np.errstate(invalid="ignore"):
        bad = values <= tolerances.geo
    if np.any(bad):
        raise DegenerateFrame(f"{name} vanishes; the frame is undefined there")


def _block_matrix(p1, p2, p3, p4, q, lam_off, conjugate=False):
    """[[0, 0, -p1, -p2], [0, 0, -p3, -p4], [-p1, -p3, 0, q], [-p2, -p4, -q, 0]] scaled off the diagonal blocks."""
    if conjugate:
        p1, p2, p3, p4, q = (np.conj(value) for value in (p1, p2, p3, p4, q))
    shape = np.broadcast(p1, p2, p3, p4, q).shape
    out = np.zeros(shape + (4, 4), dtype=complex)
    out[..., 0, 2] = out[..., 2, 0] = -lam_off * p1
    out[..., 0, 3] = out[..., 3, 0] = -lam_off * p2
    out[..., 1, 2] = out[..., 2, 1] = -lam_off * p3
    out[..., 1, 3] = out[..., 3, 1] = -lam_off * p4
    out[..., 2, 3] = q
    out[..., 3, 2] = -q
    return out


class GeneralFrameCoefficients(NamedTuple):
    p1: np.ndarray
    p2: np.ndarray
    p3: np.ndarray
    p4: np.ndarray
    q: np.ndarray

    def maurer_cartan(self, lam=1.0):
        """(U^lambda, V^lambda): the p-blocks carry lambda^{-1} in U and lambda in V."""
        lam = complex(lam)
        u_matrix = _block_matrix(self.p1, self.p2, self.p3, self.p4, self.q, 1 / lam)
        v_matrix = _block_matrix(self.p1, self.p2, self.p3, self.p4, self.q, lam, conjugate=True)
        return u_matrix, v_matrix


def general_frame_coefficients(
    u, alpha, beta, phi_min, h, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> GeneralFrameCoefficients:
    """
    p1..p4 and q on a grid; the derivatives of u and alpha inside q are central differences with spacing h.
    Requires 2e^u + alpha + conj(alpha) > 0 and e^{2u} - |alpha|^2 > 0.
    """
    u = np.asarray(u, dtype=float)
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    phi_min = np.asarray(phi_min, dtype=complex)
    e_u = np.exp(u)
    denominator = 2 * e_u + 2 * alpha.real
    gap = e_u ** 2 - np.abs(alpha) ** 2
    _require_positive(denominator, "2e^u + alpha + conj(alpha)", tolerances)
    _require_positive(gap, "e^{2u} - |alpha|^2", tolerances)
    root_d = np.sqrt(denominator)
    root_dg = np.sqrt(denominator * gap)
    beta_bar = np.conj(beta)
    p1 = -(alpha + e_u + beta_bar) / (SQRT2 * root_d)
    p2 = 1j * ((np.abs(alpha) ** 2 - e_u ** 2) - beta_bar * (e_u + alpha)) / (SQRT2 * root_dg)
    p3 = 1j * (alpha + e_u - beta_bar) / (SQRT2 * root_d)
    p4 = ((np.abs(alpha) ** 2 - e_u ** 2) + beta_bar * (e_u + alpha)) / (SQRT2 * root_dg)

    alpha_z = d_z(alpha, h)
    alpha_bar_z = d_z(np.conj(alpha), h)
    u_z = d_z(u, h)
    numerator = (
        0.5 * e_u * (alpha_z - alpha_bar_z)
        + 0.5 * (alpha_z * np.conj(alpha) - alpha_bar_z * alpha)
        - e_u * phi_min * denominator
        - u_z * e_u * (e_u + alpha)
    )
    q = 1j * numerator / (denominator * np.sqrt(gap))
    return GeneralFrameCoefficients(p1, p2, p3, p4, q)


def structure_residuals(u, alpha, beta, phi_min, h):
    """
    Pointwise residuals of the compatibility conditions of a conformal Lagrangian surface:

        first:  e^{2u} - |beta|^2 - |alpha|^2
        second: conj(alpha)_zbar alpha / 2 - e^{2u} conj(phi) - u_zbar e^{2u} + beta conj(beta)_zbar - conj(alpha)_z beta / 2
        third:  phi beta - conj(phi) alpha - alpha_zbar / 2

    and, for the whole circle of connections, `family`: conj(alpha) alpha_z / 2 + conj(beta) beta_z - u_z e^{2u}.
    """
    u = np.asarray(u, dtype=float)
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    phi_min = np.asarray(phi_min, dtype=complex)
    e_2u = np.exp(2 * u)
    alpha_bar, beta_bar = np.conj(alpha), np.conj(beta)
    return {
        "first": e_2u - np.abs(beta) ** 2 - np.abs(alpha) ** 2,
        "second": 0.5 * d_zbar(alpha_bar, h) * alpha
        - e_2u * np.conj(phi_min)
        - d_zbar(u, h) * e_2u
        + beta * d_zbar(beta_bar, h)
        - 0.5 * d_z(alpha_bar, h) * beta,
        "third": phi_min * beta - np.conj(phi_min) * alpha - 0.5 * d_zbar(alpha, h),
        "family": 0.5 * alpha_bar * d_z(alpha, h) + beta_bar * d_z(beta, h) - d_z(u, h) * e_2u,
    }


class MinimalFrameCoefficients(NamedTuple):
    p: np.ndarray
    r: np.ndarray
    qhat: np.ndarray

    @property
    def uhat(self):
        """uhat = log(2 |r|^2), the metric exponent e^uhat = e^u + betahat of the normalized pair."""
        return np.log(2 * np.abs(self.r) ** 2)

    def gauge_angle(self, lam):
        """arg r - theta for lambda = e^{i theta}, the rotation angle of the gauge to the tilde frame."""
        return np.angle(self.r) - np.angle(complex(lam))


def minimal_frame_coefficients(u, alphahat, betahat, h, tolerances: Tolerances = DEFAULT_TOLERANCES):
    """
    p, r and qhat of a minimal surface in terms of u, the holomorphic alphahat and betahat = sqrt(e^{2u} - |alphahat|^2).

    >>> coefficients = minimal_frame_coefficients(np.zeros((5, 5)), np.zeros((5, 5)), np.ones((5, 5)), 0.1)
    >>> assert np.allclose(coefficients.r, -1) and np.allclose(coefficients.p, 0)
    """
    u = np.asarray(u, dtype=float)
    alphahat = np.asarray(alphahat, dtype=complex)
    betahat = np.asarray(betahat, dtype=float)
    e_u = np.exp(u)
    denominator = 2 * e_u + 2 * alphahat.real
    _require_positive(denominator, "2e^u + alphahat + conj(alphahat)", tolerances)
    root_d = np.sqrt(denominator)
    p = (alphahat + e_u - betahat) / (SQRT2 * root_d)
    r = -(alphahat + e_u + betahat) / (SQRT2 * root_d)
    betahat_z = d_z(betahat, h)
    qhat = 1j * (0.5 * d_z(alphahat, h) * betahat / e_u - alphahat * betahat_z / e_u - betahat_z) / denominator
    return MinimalFrameCoefficients(p, r, qhat)


def minimal_flatness_residuals(coefficients: MinimalFrameCoefficients, h):
    """
    p_zbar - i p conj(qhat), r_zbar + i r conj(qhat) and i qhat_zbar / 2 - i conj(qhat)_z / 2 - |r|^2 + |p|^2.
    """
    p, r, qhat = coefficients
    qhat_bar = np.conj(qhat)
    return {
        "p": d_zbar(p, h) - 1j * p * qhat_bar,
        "r": d_zbar(r, h) + 1j * r * qhat_bar,
        "q": 0.5j * d_zbar(qhat, h) - 0.5j * d_z(qhat_bar, h) - np.abs(r) ** 2 + np.abs(p) ** 2,
    }


def lift_frame(lift, h, e_u, alpha):
    """
    The real 4x4 frame of a lift grid (columns as in the module docstring), shape (nx, ny, 4, 4).
    The two tangent columns are NaN on the two outermost rows and columns, where f_z is unavailable.
    """
    f = np.asarray(lift, dtype=complex) / SQRT2
    f_z = d_z(f, h)
    e_u = np.asarray(e_u, dtype=float)[..., np.newaxis]
    alpha = np.asarray(alpha, dtype=complex)[..., np.newaxis]
    with np.errstate(invalid="ignore"):
        denominator = 2 * e_u + 2 * alpha.real
        gap = e_u ** 2 - np.abs(alpha) ** 2
        columns = [
            (f + np.conj(f)).real / SQRT2,
            (-1j * (f - np.conj(f))).real / SQRT2,
            (f_z + np.conj(f_z)).real / np.sqrt(denominator),
            (-1j * (f_z * (e_u + np.conj(alpha)) - np.conj(f_z) * (e_u + alpha))).real / np.sqrt(denominator * gap),
        ]
    return np.stack(columns, axis=-1)
