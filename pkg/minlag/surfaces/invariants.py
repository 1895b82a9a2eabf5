"""
Geometric invariants of a surface given on a grid, by central differences.

For the horizontal lift f = lift / sqrt(2):

    e^u = (f_z, f_z),  alpha = <f_z, f_z>,  beta = <f_z, f_zbar>,  phi_min = e^{-u} (f_zzbar, f_zbar)

with the bilinear form <., .> of signature (2, 2) and the Hermitian form (z, w) = <z, conj w>. The induced metric is
2 e^u dz dzbar.
"""
import logging
from typing import NamedTuple

import numpy as np

from ..algebra.forms import hermitian_form, minkowski_form
from ..utils.differences import d_z, d_zbar, d_zzbar, nanmax_abs
from ..utils.errors import DomainError, NotHorizontal
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)


class LiftInvariants(NamedTuple):
    e_u: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    phi_min: np.ndarray
    # (f_z, f) on every node, zero for a horizontal lift
    horizontality: np.ndarray

    @property
    def u(self):
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.log(self.e_u)


def invariants_from_lift(lift, h, tolerances: Tolerances = DEFAULT_TOLERANCES) -> LiftInvariants:
    """
    `lift` has shape (nx, ny, 4) and `h` is the grid spacing (scalar or (hx, hy)). Border nodes are NaN.
    """
    f = np.asarray(lift, dtype=complex) / np.sqrt(2)
    f_z = d_z(f, h)
    f_zbar = d_zbar(f, h)
    f_zzbar = d_zzbar(f, h)
    e_u = hermitian_form(f_z, f_z).real
    horizontality = hermitian_form(f_z, f)
    scale = max(1.0, nanmax_abs(e_u))
    worst = nanmax_abs(horizontality)
    if worst > tolerances.fd * scale:
        raise NotHorizontal(f"(f_z, f) reaches {worst:.3g}; the lift is not horizontal")
    with np.errstate(invalid="ignore", divide="ignore"):
        phi_min = hermitian_form(f_zzbar, f_zbar) / e_u
    return LiftInvariants(
        e_u=e_u,
        alpha=minkowski_form(f_z, f_z),
        beta=minkowski_form(f_z, f_zbar),
        phi_min=phi_min,
        horizontality=horizontality,
    )


def gaussian_curvature(e_u, h):
    """K = -e^{-u} u_zzbar of the metric 2 e^u dz dzbar."""
    with np.errstate(invalid="ignore", divide="ignore"):
        return -d_zzbar(np.log(e_u), h).real / e_u


def metric_split(e_u, alphahat, tolerances: Tolerances = DEFAULT_TOLERANCES):
    """
    (e^uhat, e^utilde) = e^u +- sqrt(e^{2u} - |alphahat|^2), the metric factors of fmax and of N.
    Works elementwise on arrays.

    >>> metric_split(1.5, 0.0)
    (3.0, 0.0)
    >>> metric_split(2.0, 2.0)
    (2.0, 2.0)
    """
    e_u = np.asarray(e_u, dtype=float)
    discriminant = e_u ** 2 - np.abs(alphahat) ** 2
    scale = np.maximum(1.0, e_u ** 2)
    with np.errstate(invalid="ignore"):
        negative = discriminant < -tolerances.geo * scale
    if np.any(negative):
        raise DomainError("e^{2u} < |alphahat|^2: no real metric split")
    root = np.sqrt(np.clip(discriminant, 0.0, None))
    high, low = e_u + root, e_u - root
    if high.ndim == 0:
        return float(high), float(low)
    return high, low
