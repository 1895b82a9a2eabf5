"""
The pair (fmax, N) of spacelike maximal surfaces in AdS3 that belongs to a minimal Lagrangian surface with metric
2 e^u dz dzbar and holomorphic differential alphahat dz^2: both are unit timelike and orthogonal, fmax is conformal
and maximal with Hopf differential <(fmax)_zz, N> = i alphahat, its metric factor is one of e^u +- betahat and
4 e^u = 2 e^uhat + 2 |Q|^2 e^-uhat.
"""
import logging
import math

import numpy as np

from ._residuals import normalized, require_resolution, scale_of
from .report import ResidualReport
from ..algebra.forms import minkowski_form
from ..surfaces.invariants import metric_split
from ..utils.differences import d_z, d_zbar, d_zz, d_zzbar
from ..utils.errors import DomainError
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)


def check_correspondence(fmax, normal, alphahat, u, h, tolerances: Tolerances = DEFAULT_TOLERANCES) -> ResidualReport:
    """
    `fmax` and `normal` are (nx, ny, 4) grids in R^4_2, `alphahat` and `u` the invariants of the lift on the same grid.
    The roles of fmax and N may be swapped: the metric of either is one root of the split.
    """
    fmax = np.asarray(fmax, dtype=float)
    normal = np.asarray(normal, dtype=float)
    alphahat = np.asarray(alphahat, dtype=complex)
    e_u = np.exp(np.asarray(u, dtype=float))
    report = ResidualReport()

    report.add("fmax_unit", normalized(minkowski_form(fmax, fmax) + 1), tolerances.geo)
    report.add("normal_unit", normalized(minkowski_form(normal, normal) + 1), tolerances.geo)
    report.add("orthogonal", normalized(minkowski_form(fmax, normal)), tolerances.geo)

    require_resolution(fmax, h, tolerances.fd, scale_of(fmax), name="fmax")
    f_z = d_z(fmax, h)
    e_uhat = minkowski_form(f_z, d_zbar(fmax, h)).real
    scale = scale_of(e_u)
    report.add("conformal", normalized(minkowski_form(f_z, f_z), scale), tolerances.fd)

    hopf = minkowski_form(d_zz(fmax, h), normal)
    report.add("hopf", normalized(hopf - 1j * alphahat, scale_of(alphahat)), tolerances.fd)

    try:
        high, low = metric_split(e_u, alphahat, tolerances)
    except DomainError as error:
        logger.info("no metric split: %s", error)
        report.add("metric_split", math.inf, tolerances.fd)
    else:
        split = np.minimum(np.abs(e_uhat - high), np.abs(e_uhat - low))
        report.add("metric_split", normalized(split, scale), tolerances.fd)

    with np.errstate(invalid="ignore", divide="ignore"):
        sasaki = 4 * e_u - 2 * e_uhat - 2 * np.abs(hopf) ** 2 / e_uhat
    report.add("sasaki", normalized(sasaki, scale), tolerances.fd)

    report.add("maximal", normalized(minkowski_form(d_zzbar(fmax, h), normal), scale), tolerances.fd)
    return report
