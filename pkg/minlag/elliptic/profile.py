"""
The profile function v(x) of the R-equivariant surfaces.

v solves (v')^2 = (v^2 - 4a^2)(v^2 - 4b^2) + 4c^2 v^2 with v(0) = 2b and v'(0) = -4bc. Writing the right hand side as
(v^2 - Z1)(v^2 - Z2) gives v(x) = sqrt(Z1) sn(sqrt(Z2)(x - x0) | Z1/Z2). The profile lives on the largest interval
(-kappa1^2, kappa2^2) around 0 on which v stays finite and nonzero.
"""
import logging
import math

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .jacobi import ellipfun, ellipk_complex
from ..utils.errors import DegenerateDiscriminant, NoConvergence, OutOfInterval
from ..utils.pydantic_base_model import ComplexValue, FrozenCamelModel
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

DISCRIMINANT_TOLERANCE = 1e-12
SCAN_POINTS = 4000
NEWTON_STEPS = 30
CROSS_CHECK_POINTS = 50
CROSS_CHECK_TOLERANCE = 1e-7


class EllipticProfile(FrozenCamelModel):
    a: float
    b: float
    c: float
    z1: ComplexValue
    z2: ComplexValue
    # the square roots of Z1 and Z2 actually used in v(x) = root_z1 sn(root_z2 (x - x0) | z1 / z2)
    root_z1: ComplexValue
    root_z2: ComplexValue
    x0: ComplexValue
    kappa1sq: float
    kappa2sq: float
    ode_deviation: float = 0.0

    @property
    def parameter(self):
        return self.z1 / self.z2

    @property
    def modulus(self):
        return np.sqrt(self.parameter)

    @property
    def interval(self):
        return -self.kappa1sq, self.kappa2sq

    def _elliptic(self, x):
        return ellipfun(self.root_z2 * (np.asarray(x, dtype=float) - self.x0), self.parameter)

    def v(self, x):
        """The profile at real x (array or scalar); v is real on the real axis."""
        sn, _, _ = self._elliptic(x)
        return np.real(self.root_z1 * sn)

    def v_prime(self, x):
        _, cn, dn = self._elliptic(x)
        return np.real(self.root_z1 * self.root_z2 * cn * dn)

    def contains(self, x):
        x = np.asarray(x, dtype=float)
        return (x > -self.kappa1sq) & (x < self.kappa2sq)

    def require(self, x):
        if not np.all(self.contains(x)):
            raise OutOfInterval(f"x must lie in ({-self.kappa1sq:.6g}, {self.kappa2sq:.6g})")

    def ode_residual(self, x):
        """(v')^2 - (v^2 - 4a^2)(v^2 - 4b^2) - 4c^2 v^2."""
        v, vp = self.v(x), self.v_prime(x)
        a, b, c = self.a, self.b, self.c
        return vp ** 2 - (v ** 2 - 4 * a ** 2) * (v ** 2 - 4 * b ** 2) - 4 * c ** 2 * v ** 2


def discriminant_roots(a, b, c):
    """
    (Z1, Z2) = 2K -+ 2 sqrt(K^2 - 4a^2b^2) with K = a^2 + b^2 - c^2.

    >>> z1, z2 = discriminant_roots(1, 6, -47 ** 0.5)
    >>> assert abs(z1 - (-20 - 4j * 11 ** 0.5)) < 1e-12 and abs(z2 - (-20 + 4j * 11 ** 0.5)) < 1e-12
    """
    k = a * a + b * b - c * c
    disc = k * k - 4 * a * a * b * b
    if abs(disc) <= DISCRIMINANT_TOLERANCE * (k * k + 4 * a * a * b * b):
        raise DegenerateDiscriminant(f"(a^2 + b^2 - c^2)^2 = 4a^2b^2 for (a, b, c) = ({a}, {b}, {c})")
    root = np.sqrt(complex(disc))
    return 2 * k - 2 * root, 2 * k + 2 * root


def _path(s0):
    """Integration path 0 -> s0 for the inverse of sn; bent off the real axis when it would run through +-1."""
    bend = 0.0
    if abs(s0.imag) < 1e-3 * abs(s0) and abs(s0) > 0.9:
        bend = 0.5 * abs(s0)

    def point(tau):
        return s0 * tau + 1j * bend * tau * (1 - tau)

    def tangent(tau):
        return s0 + 1j * bend * (1 - 2 * tau)

    return point, tangent


def inverse_sn(s0, m, tolerances: Tolerances = DEFAULT_TOLERANCES):
    """
    Some u with sn(u | m) = s0, obtained by integrating du = dt / sqrt((1 - t^2)(1 - m t^2)) along a path
    from 0 to s0 with the square root continued from 1, and polished by Newton steps.
    """
    s0, m = complex(s0), complex(m)
    point, tangent = _path(s0)

    def rhs(tau, y):
        t, dt = point(tau), tangent(tau)
        w = y[1]
        return [dt / w, dt * (-t * (1 - m * t * t) - m * t * (1 - t * t)) / w]

    solution = solve_ivp(rhs, (0.0, 1.0), np.array([0j, 1 + 0j]), method="DOP853", rtol=1e-12, atol=1e-14)
    if not solution.success:
        raise NoConvergence(f"inverse sn path integration failed: {solution.message}")
    u = solution.y[0, -1]
    for _ in range(NEWTON_STEPS):
        sn, cn, dn = ellipfun(u, m)
        error = sn - s0
        if abs(error) < 1e-15 * max(1.0, abs(s0)):
            break
        u = u - error / (cn * dn)
    sn = ellipfun(u, m)[0]
    if abs(sn - s0) > tolerances.ode * max(1.0, abs(s0)):
        raise NoConvergence(f"could not invert sn at {s0}")
    return complex(u)


def _turning_point(s0, m):
    """sn(u) = s0 at a zero of cn dn: s0 = +-1 gives +-K, s0 = +-1/k gives +-(K + iK')."""
    k_value, k_prime = ellipk_complex(m), ellipk_complex(1 - m)
    if abs(s0 * s0 - 1) < abs(m * s0 * s0 - 1):
        return np.sign(s0.real) * k_value
    return np.sign((s0 * np.sqrt(m)).real) * (k_value + 1j * k_prime)


def _sign_changes(profile, direction, span):
    """First point in direction +-1 at which v vanishes or blows up, or inf."""
    x = direction * np.linspace(0.0, span, SCAN_POINTS + 1)
    with np.errstate(all="ignore"):
        v = profile.v(x)
    sign0 = np.sign(profile.b)
    changed = np.flatnonzero(~(np.sign(v) == sign0))
    if changed.size == 0:
        return math.inf
    j = changed[0]

    def indicator(t):
        with np.errstate(all="ignore"):
            value = float(profile.v(t))
        if not np.isfinite(value) or value == 0:
            return 0.0
        return 1 / (value + 1 / value)

    left, right = x[j - 1], x[j]
    if indicator(right) == 0.0:
        return abs(right)
    return abs(brentq(indicator, left, right, xtol=1e-14, rtol=1e-14))


def _ode_deviation(profile, a, b, c):
    """Largest gap between the closed form and a direct integration of v'' = 2v(v^2 - 2a^2 - 2b^2 + 2c^2)."""
    k = a * a + b * b - c * c
    deviation = 0.0
    for end in (-profile.kappa1sq / 2, profile.kappa2sq / 2):
        if not math.isfinite(end):
            end = math.copysign(1.0, end) * 2 * abs(2 * ellipk_complex(profile.parameter) / profile.root_z2)
        samples = np.linspace(0.0, end, CROSS_CHECK_POINTS)
        solution = solve_ivp(
            lambda _, y: [y[1], 2 * y[0] * (y[0] ** 2 - 2 * k)],
            (0.0, end),
            [2 * b, -4 * b * c],
            method="DOP853",
            t_eval=samples,
            rtol=1e-12,
            atol=1e-12,
        )
        closed = profile.v(samples)
        scale = max(1.0, float(np.max(np.abs(closed))))
        deviation = max(deviation, float(np.max(np.abs(solution.y[0] - closed))) / scale)
    return deviation


def v_profile(a, b, c, tolerances: Tolerances = DEFAULT_TOLERANCES) -> EllipticProfile:
    """
    Builds the profile of the equivariant potential with parameters (a, b, c).

    >>> profile = v_profile(1.0, 6.0, -47 ** 0.5)
    >>> assert abs(profile.v(0.0) - 12.0) < 1e-9
    """
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    z1, z2 = discriminant_roots(a, b, c)
    m = z1 / z2
    root_z1, root_z2 = np.sqrt(z1), np.sqrt(z2)
    s0 = 2 * b / root_z1
    if c == 0:
        u0 = _turning_point(s0, m)
    else:
        u0 = inverse_sn(s0, m, tolerances)
        _, cn, dn = ellipfun(u0, m)
        # the other root of Z1 flips the sign of v'(0); v'(0) has to have the sign of -bc
        if (root_z1 * root_z2 * cn * dn / (-4 * b * c)).real < 0:
            root_z1, u0 = -root_z1, -u0

    span = 2 * (abs(4 * ellipk_complex(m)) + abs(2 * ellipk_complex(1 - m))) / abs(root_z2)
    profile = EllipticProfile(
        a=a, b=b, c=c, z1=z1, z2=z2, root_z1=root_z1, root_z2=root_z2, x0=-u0 / root_z2, kappa1sq=math.inf, kappa2sq=math.inf
    )
    v0 = profile.v(0.0)
    if abs(v0 - 2 * b) > tolerances.ode * max(1.0, abs(b)):
        raise NoConvergence(f"profile misses the initial value: v(0) = {v0} instead of {2 * b}")

    kappa1sq = _sign_changes(profile, -1, span)
    kappa2sq = _sign_changes(profile, 1, span)
    profile = profile.copy(update={"kappa1sq": kappa1sq, "kappa2sq": kappa2sq})
    deviation = _ode_deviation(profile, a, b, c)
    if deviation > CROSS_CHECK_TOLERANCE:
        logger.warning("closed form and integrated profile differ by %.3g", deviation)
    profile = profile.copy(update={"ode_deviation": deviation})
    logger.debug("profile (%g, %g, %g): interval (%.6g, %.6g), x0 = %s", a, b, c, -kappa1sq, kappa2sq, profile.x0)
    return profile
