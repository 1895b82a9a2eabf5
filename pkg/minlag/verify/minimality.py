import numpy as np

from ._residuals import normalized, require_resolution, scale_of
from .report import ResidualReport
from ..surfaces.invariants import invariants_from_lift
from ..utils.differences import d_zbar
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

# nodes with |beta| below this fraction of e^u carry no usable argument
BETA_MASK = 1e-6


def beta_argument_spread(beta, e_u, mask=BETA_MASK):
    """
    Width, modulo pi, of the smallest arc holding the arguments of beta over the nodes with |beta| >= mask e^u.
    Modulo pi since beta may change sign through a zero line.
    """
    beta = np.asarray(beta, dtype=complex)
    with np.errstate(invalid="ignore"):
        usable = np.isfinite(beta) & (np.abs(beta) >= mask * np.asarray(e_u))
    if not np.any(usable):
        return 0.0
    values = beta[usable]
    # doubled arguments on the circle, the widest gap between neighbours is what the arc leaves out
    doubled = np.sort(np.angle(values ** 2))
    gaps = np.diff(np.append(doubled, doubled[0] + 2 * np.pi))
    return float(max(2 * np.pi - np.max(gaps), 0.0) / 2)


def check_minimality(lift, h, tolerances: Tolerances = DEFAULT_TOLERANCES) -> ResidualReport:
    """
    A Lagrangian surface is minimal iff its mean curvature form phi vanishes; equivalently alpha is holomorphic and
    beta has constant argument where it does not vanish. Raises NotHorizontal for lifts that are not horizontal.
    """
    lift = np.asarray(lift, dtype=complex)
    require_resolution(lift, h, tolerances.fd, scale_of(lift), name="lift")
    invariants = invariants_from_lift(lift, h, tolerances)
    e_u = invariants.e_u
    report = ResidualReport()
    report.add("phi_min", normalized(invariants.phi_min, scale_of(np.sqrt(e_u))), tolerances.fd)
    report.add("alpha_holomorphic", normalized(d_zbar(invariants.alpha, h), scale_of(e_u)), tolerances.fd)
    report.add("beta_argument", beta_argument_spread(invariants.beta, e_u), tolerances.fd)
    return report
