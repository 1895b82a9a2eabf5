import numpy as np

from ._residuals import normalized, require_resolution, scale_of
from .report import ResidualReport
from ..utils.differences import d_zzbar
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances


def sinh_gordon_residual(uhat, alphahat, h):
    """uhat_zzbar - e^uhat + |alphahat|^2 e^-uhat."""
    uhat = np.asarray(uhat, dtype=float)
    return d_zzbar(uhat, h) - np.exp(uhat) + np.abs(alphahat) ** 2 * np.exp(-uhat)


def check_sinh_gordon(uhat, alphahat, h, e_u=None, tolerances: Tolerances = DEFAULT_TOLERANCES) -> ResidualReport:
    """
    The elliptic sinh-Gordon equation for (uhat, alphahat) and, if `e_u` is given, the metric identity
    2 e^u = e^uhat + |alphahat|^2 e^-uhat. Both roots e^u +- betahat satisfy the two equations.
    """
    uhat = np.asarray(uhat, dtype=float)
    alphahat = np.asarray(alphahat, dtype=complex)
    report = ResidualReport()
    e_uhat = np.exp(uhat)
    scale = scale_of(e_uhat, np.abs(alphahat) ** 2 / e_uhat)
    require_resolution(uhat, h, tolerances.fd, scale_of(uhat), name="uhat")
    report.add("sinh_gordon", normalized(sinh_gordon_residual(uhat, alphahat, h), scale), tolerances.fd)
    if e_u is not None:
        e_u = np.asarray(e_u, dtype=float)
        metric = 2 * e_u - e_uhat - np.abs(alphahat) ** 2 / e_uhat
        report.add("metric", normalized(metric, scale_of(e_u)), tolerances.geo)
    return report
