"""
The surface as a pair of harmonic maps (phi, psi) into H^2 x H^2 (curvature -4 normalization, the metric of the
product surface is four times that of the Lagrangian surface).

With <phi_zbar, phi_z> = 2 e^u, the angle function Gamma = J / (8 e^u) built from the Jacobian J = det(phi, phi_x, phi_y)
and Theta = (<phi_z, phi_z> - <psi_z, psi_z>) / 2 one has

    Theta = 2 alpha (up to a constant phase),  |Gamma| = e^-u |beta| / 2,
    Codazzi:  |Theta|^2 = 4 e^{2u} (1 - 4 Gamma^2),
    Gauss:    4 |Gamma_z|^2 = (1 - 4 Gamma^2)(u_zzbar - 8 e^u Gamma^2).

The Gauss equation is equivalent to a second order equation for u with coefficients alpha, beta.
"""
from typing import NamedTuple

import numpy as np

from ._residuals import normalized, require_resolution, scale_of
from .report import ResidualReport
from ..algebra.hyperbolic import lorentz_dot
from ..utils.differences import d_z, d_zbar, d_zzbar, first_derivative
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances


class HarmonicPairData(NamedTuple):
    e_u: np.ndarray
    gamma: np.ndarray
    theta: np.ndarray


def harmonic_pair_data(phi, psi, h) -> HarmonicPairData:
    """e^u, Gamma and Theta of a grid of (phi, psi) in H^2 x H^2, arrays of shape (nx, ny, 3)."""
    phi = np.asarray(phi, dtype=float)
    psi = np.asarray(psi, dtype=float)
    hx, hy = (h, h) if np.ndim(h) == 0 else h
    phi_z, psi_z = d_z(phi, h), d_z(psi, h)
    e_u = 0.5 * lorentz_dot(np.conj(phi_z), phi_z).real
    jacobian = np.linalg.det(np.stack([phi, first_derivative(phi, hx, 0), first_derivative(phi, hy, 1)], axis=-1))
    with np.errstate(invalid="ignore", divide="ignore"):
        gamma = jacobian / (8 * e_u)
    theta = 0.5 * (lorentz_dot(phi_z, phi_z) - lorentz_dot(psi_z, psi_z))
    return HarmonicPairData(e_u, gamma, theta)


def second_order_pde_residual(u, alpha, beta, h):
    """
    u_zzbar e^u |beta|^2 - |alpha_z|^2 e^u / 4 - |u_z|^2 e^u |alpha|^2 + alpha_z u_zbar e^u conj(alpha) / 2
    + conj(alpha)_zbar u_z e^u alpha / 2 - 2 |beta|^4.
    """
    u = np.asarray(u, dtype=float)
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    e_u = np.exp(u)
    u_z, u_zbar = d_z(u, h), d_zbar(u, h)
    alpha_z = d_z(alpha, h)
    alpha_bar_zbar = d_zbar(np.conj(alpha), h)
    beta2 = np.abs(beta) ** 2
    return (
        d_zzbar(u, h) * e_u * beta2
        - 0.25 * np.abs(alpha_z) ** 2 * e_u
        - np.abs(u_z) ** 2 * e_u * np.abs(alpha) ** 2
        + 0.5 * alpha_z * u_zbar * e_u * np.conj(alpha)
        + 0.5 * alpha_bar_zbar * u_z * e_u * alpha
        - 2 * beta2 ** 2
    )


def _phase_fit(theta, target):
    """theta - e^{i chi} target for the constant phase chi that fits best."""
    with np.errstate(invalid="ignore"):
        overlap = np.nansum(theta * np.conj(target))
    phase = np.exp(1j * np.angle(overlap)) if abs(overlap) > 0 else 1.0
    return theta - phase * target


def check_appendix(u, alpha, beta, gamma, theta, h, tolerances: Tolerances = DEFAULT_TOLERANCES) -> ResidualReport:
    """
    (u, alpha, beta) are the invariants of the Lagrangian surface, (gamma, theta) those of its harmonic pair.
    """
    u = np.asarray(u, dtype=float)
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    gamma = np.asarray(gamma, dtype=float)
    theta = np.asarray(theta, dtype=complex)
    e_u = np.exp(u)
    report = ResidualReport()
    scale = scale_of(e_u)
    require_resolution(gamma, h, tolerances.fd, name="Gamma")

    report.add("theta", normalized(_phase_fit(theta, 2 * alpha), 2 * scale), tolerances.fd)
    with np.errstate(invalid="ignore"):
        report.add("gamma", normalized(np.abs(gamma) - 0.5 * np.abs(beta) / e_u), tolerances.fd)
    squeeze = 1 - 4 * gamma ** 2
    codazzi = np.abs(theta) ** 2 - 4 * e_u ** 2 * squeeze
    report.add("codazzi", normalized(codazzi, scale ** 2), tolerances.fd)
    gauss = 4 * np.abs(d_z(gamma, h)) ** 2 - squeeze * (d_zzbar(u, h) - 8 * e_u * gamma ** 2)
    report.add("gauss", normalized(gauss, scale), tolerances.fd)
    pde = second_order_pde_residual(u, alpha, beta, h)
    report.add("second_order_pde", normalized(pde, scale_of(np.abs(beta) ** 2) ** 2), tolerances.fd)
    return report
