"""
Extended frames that are known without the numerical Iwasawa factorization.

The diagonal and the geodesic product potentials have elementary frames. The R-equivariant potential has the
closed form below, built from the elliptic profile v, and a companion obtained by integrating the x-part
G' = G Omega of the Maurer-Cartan form; the companion stays regular at lambda = +-1, +-i where the closed form has
removable singularities.
"""
import logging

import numpy as np
from scipy.integrate import quad, solve_ivp

from .extended_frame import FramePair, Grid, extended_frame
from ..algebra.matrices import mat_exp
from ..elliptic import EllipticProfile, v_profile
from ..loops.laurent import roots_of_unity
from ..potentials import DiagonalPotential, EquivariantPotential, GeodesicProductPotential, Potential
from ..utils.errors import BranchCut, InvalidInput, NoConvergence, solver_failures
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

CONTINUATION_POINTS = 64
SINGULAR = 1e-10
QUAD_LIMIT = 200


def _default_order(samples):
    return min(16, (samples - 1) // 2)


def diagonal_frame(z, lam):
    """
    F = (1 - |z|^2)^{-1/2} [[1, z / lambda], [conj(z) lambda, 1]], defined on the unit disk.

    >>> assert np.allclose(diagonal_frame(0.5, 1.0), 2 / 3 ** 0.5 * np.array([[1, 0.5], [0.5, 1]]))
    """
    lam = np.asarray(lam, dtype=complex)
    z = complex(z)
    out = np.empty(lam.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = out[..., 1, 1] = 1
    out[..., 0, 1] = z / lam
    out[..., 1, 0] = np.conj(z) * lam
    return out / np.sqrt(1 - abs(z) ** 2)


def geodesic_frame(z, lam):
    """F = [[cosh s, sinh s], [sinh s, cosh s]] with s = z / lambda + conj(z) lambda."""
    lam = np.asarray(lam, dtype=complex)
    s = complex(z) / lam + np.conj(complex(z)) * lam
    out = np.empty(lam.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = out[..., 1, 1] = np.cosh(s)
    out[..., 0, 1] = out[..., 1, 0] = np.sinh(s)
    return out


def _require_origin(grid: Grid):
    if grid.basepoint != 0:
        raise InvalidInput("closed-form frames are based at z = 0")


def diagonal_frame_pair(grid: Grid, samples: int = 64) -> FramePair:
    """Closed-form frames of the diagonal potential; nodes outside the unit disk are holes."""
    _require_origin(grid)
    lam = roots_of_unity(samples)
    points = grid.points()
    values = np.full(grid.shape + (samples, 2, 2), np.nan, dtype=complex)
    rho = np.full(grid.shape, np.nan)
    holes = {}
    for index in np.ndindex(*grid.shape):
        z = points[index]
        if abs(z) >= 1:
            holes[index] = "outside the unit disk"
            continue
        values[index] = diagonal_frame(z, lam)
        rho[index] = 1 / np.sqrt(1 - abs(z) ** 2)
    potential = DiagonalPotential(samples=samples, order=_default_order(samples))
    return FramePair(grid, values, rho, holes, potential)


def geodesic_frame_pair(grid: Grid, samples: int = 64) -> FramePair:
    _require_origin(grid)
    potential = GeodesicProductPotential(samples=samples, order=_default_order(samples))
    return FramePair.from_function(grid, samples, geodesic_frame, rho=lambda z: 1.0, potential=potential)


def _sinhc(w):
    w = np.asarray(w, dtype=complex)
    small = np.abs(w) < 1e-8
    safe = np.where(small, 1.0, w)
    return np.where(small, 1 + w * w / 6, np.sinh(safe) / safe)


def _t(profile, lam):
    a, b, c = profile.a, profile.b, profile.c
    return a * b + (a * a + b * b - c * c) * lam ** 2 + a * b * lam ** 4


def _check_denominator(profile, x, lam):
    """Raises BranchCut if Q = 4ab lambda^2 + v^2 vanishes somewhere on [0, x]; this needs lambda^2 = +-1."""
    shift = 4 * profile.a * profile.b * lam * lam
    q = shift + profile.v(np.linspace(0.0, x, CONTINUATION_POINTS)) ** 2
    crosses = abs(shift.imag) <= SINGULAR * abs(shift) and np.min(q.real) * np.max(q.real) <= 0
    if crosses or np.min(np.abs(q)) < SINGULAR * abs(shift):
        raise BranchCut(f"4ab lambda^2 + v^2 vanishes on [0, {x}] for lambda = {lam}")


def f_integral(profile: EllipticProfile, x, lam):
    """
    The auxiliary function f(x) = int_0^x 2 ds / (1 + v(s)^2 / (4 a b lambda^2)) by adaptive quadrature.

    >>> from minlag.elliptic import v_profile
    >>> assert f_integral(v_profile(1.0, 6.0, -47 ** 0.5), 0.0, 1j) == 0
    """
    profile.require(x)
    lam = complex(lam)
    if x == 0:
        return 0j
    scale = 4 * profile.a * profile.b * lam * lam

    def integrand(s):
        return 2 / (1 + profile.v(s) ** 2 / scale)

    _check_denominator(profile, x, lam)
    real, _ = quad(lambda s: integrand(s).real, 0.0, x, epsabs=1e-13, epsrel=1e-11, limit=QUAD_LIMIT)
    imag, _ = quad(lambda s: integrand(s).imag, 0.0, x, epsabs=1e-13, epsrel=1e-11, limit=QUAD_LIMIT)
    return complex(real, imag)


def _root_of_g(profile, x, lam):
    """sqrt(g) with g = (4ab lambda^2 + v^2) / (2 v (a lambda^2 + b)), continued along [0, x] from sqrt(g(0)) = 1."""
    a, b = profile.a, profile.b
    p = a * lam * lam + b
    if abs(p) < SINGULAR:
        raise BranchCut(f"a lambda^2 + b vanishes at lambda = {lam}")
    _check_denominator(profile, x, lam)
    v = profile.v(np.linspace(0.0, x, CONTINUATION_POINTS))
    g = (4 * a * b * lam * lam + v ** 2) / (2 * v * p)
    root = 1.0 + 0j
    for value in g[1:]:
        candidate = np.sqrt(value)
        root = candidate if abs(candidate - root) <= abs(candidate + root) else -candidate
    return root


def explicit_frame_equivariant(profile: EllipticProfile, x: float, y: float, lam: complex):
    """
    The closed-form extended frame of the R-equivariant potential at z = x + iy.

    With v = v(x), P = a lambda^2 + b, Q = 4ab lambda^2 + v^2, g = Q / (2vP), S = Q / sqrt(g),
    t = ab + (a^2 + b^2 - c^2) lambda^2 + ab lambda^4 and w = (f(x) - z) / lambda, t^ = sqrt(-t) w:

        F11 = sqrt(g) (cosh t^ - c lambda w sinhc t^)
        F12 = (-lambda (2cv + v') cosh t^ + (-2tv + c lambda^2 v') w sinhc t^) / S
        F21 = S w sinhc t^ / (2v)
        F22 = (P / S) (2v cosh t^ - lambda v' w sinhc t^)

    Both cosh t^ and w sinhc t^ are even in sqrt(-t), so only sqrt(g) needs a branch; it is continued from x = 0.
    """
    profile.require(x)
    lam = complex(lam)
    a, b, c = profile.a, profile.b, profile.c
    v, vp = float(profile.v(x)), float(profile.v_prime(x))
    p = a * lam * lam + b
    q = 4 * a * b * lam * lam + v * v
    root_g = _root_of_g(profile, x, lam)
    s_value = q / root_g
    t = _t(profile, lam)
    w = (f_integral(profile, x, lam) - complex(x, y)) / lam
    hat = np.sqrt(-t) * w
    cosh, sinh_over = np.cosh(hat), w * _sinhc(hat)
    return np.array(
        [
            [
                root_g * (cosh - c * lam * sinh_over),
                (-lam * (2 * c * v + vp) * cosh + (-2 * t * v + c * lam * lam * vp) * sinh_over) / s_value,
            ],
            [s_value * sinh_over / (2 * v), p / s_value * (2 * v * cosh - lam * vp * sinh_over)],
        ]
    )


def _omega(profile, v, lam):
    ab = profile.a * profile.b
    out = np.zeros(lam.shape + (2, 2), dtype=complex)
    out[..., 0, 1] = 2 * ab / (v * lam) - lam * v / 2
    out[..., 1, 0] = 2 * ab * lam / v - v / (2 * lam)
    return out


def _integrate_g(profile: EllipticProfile, xs, lam, tolerances):
    """G at the (monotone, same-signed) points xs, from G(0) = Id along with v'' = 2v(v^2 - 2K)."""
    k = profile.a ** 2 + profile.b ** 2 - profile.c ** 2
    size = lam.size
    if xs[-1] == 0:
        return np.tile(np.eye(2, dtype=complex), (len(xs), size, 1, 1))

    def rhs(_, state):
        v, vp = state[0].real, state[1].real
        g = state[2:].reshape(size, 2, 2)
        dg = g @ _omega(profile, v, lam)
        return np.concatenate([[vp, 2 * v * (v * v - 2 * k)], dg.ravel()])

    start = np.concatenate([[2 * profile.b, -4 * profile.b * profile.c], np.tile(np.eye(2), (size, 1, 1)).ravel()])
    with solver_failures("equivariant frame integration"):
        solution = solve_ivp(
            rhs,
            (0.0, xs[-1]),
            start.astype(complex),
            method="DOP853",
            t_eval=xs,
            rtol=1e-12,
            atol=min(1e-12, tolerances.ode / 1000),
        )
    if not solution.success:
        raise NoConvergence(f"equivariant frame integration failed: {solution.message}")
    return solution.y[2:].T.reshape(len(xs), size, 2, 2)


def equivariant_frame(profile: EllipticProfile, x: float, y: float, lam, tolerances: Tolerances = DEFAULT_TOLERANCES):
    """
    F(x + iy) = exp(iy A(lambda)) G(x) with G' = G Omega, G(0) = Id and

        Omega = [[0, 2ab / (v lambda) - lambda v / 2], [2ab lambda / v - v / (2 lambda), 0]].

    `lam` may be a scalar or an array; the result has shape lam.shape + (2, 2).
    """
    profile.require(x)
    lam = np.asarray(lam, dtype=complex)
    flat = lam.reshape(-1)
    if x == 0:
        g = np.tile(np.eye(2, dtype=complex), (flat.size, 1, 1))
    else:
        g = _integrate_g(profile, np.array([0.0, x]), flat, tolerances)[-1]
    potential = EquivariantPotential(a=profile.a, b=profile.b, c=profile.c)
    frame = mat_exp(1j * y * potential.coefficient(0.0, flat)) @ g
    return frame.reshape(lam.shape + (2, 2))


def equivariant_frame_pair(
    profile: EllipticProfile, grid: Grid, samples: int = 64, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> FramePair:
    """Frames of the R-equivariant potential on a grid, with rho = sqrt(2b / v(x)) from B(0) = diag(rho, 1/rho)."""
    _require_origin(grid)
    xs, ys = grid.xs, grid.ys
    profile.require(xs)
    lam = roots_of_unity(samples)
    potential = EquivariantPotential(a=profile.a, b=profile.b, c=profile.c, samples=samples, order=_default_order(samples))
    g = np.empty((xs.size, samples, 2, 2), dtype=complex)
    g[xs == 0] = np.eye(2)
    for side in (xs > 0, xs < 0):
        indices = np.flatnonzero(side)
        if indices.size == 0:
            continue
        order = indices[np.argsort(np.abs(xs[indices]))]
        points = np.concatenate([[0.0], xs[order]])
        g[order] = _integrate_g(profile, points, lam, tolerances)[1:]
    a_matrix = potential.matrix(lam)
    values = np.empty(grid.shape + (samples, 2, 2), dtype=complex)
    for j, y in enumerate(ys):
        rotation = mat_exp(1j * y * a_matrix)
        values[:, j] = rotation[np.newaxis] @ g
    rho = np.sqrt(2 * profile.b / profile.v(xs))[:, np.newaxis] * np.ones(grid.shape)
    logger.debug("equivariant frames on %d x %d nodes", *grid.shape)
    return FramePair(grid, values, rho, potential=potential)


def build_frames(
    potential: Potential, grid: Grid, tolerances: Tolerances = DEFAULT_TOLERANCES, closed_form: bool = True
) -> FramePair:
    """
    Extended frames for any potential: the closed forms where they exist (and `closed_form` is set), the numerical
    DPW sweep otherwise.
    """
    if closed_form and grid.basepoint == 0:
        if isinstance(potential, DiagonalPotential):
            return diagonal_frame_pair(grid, potential.samples)
        if isinstance(potential, GeodesicProductPotential):
            return geodesic_frame_pair(grid, potential.samples)
        if isinstance(potential, EquivariantPotential):
            with solver_failures("equivariant frames"):
                profile = v_profile(potential.a, potential.b, potential.c, tolerances)
                return equivariant_frame_pair(profile, grid, potential.samples, tolerances)
    return extended_frame(potential, grid, tolerances)
