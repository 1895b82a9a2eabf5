"""
Symmetries of DPW surfaces, checked against independently factorized frames.

R-equivariant potentials: F(z + i theta) = exp(i theta A(lambda)) F(z), hence the lift moves by the SO0(2,2) element of
(exp(i theta A(lambda)), exp(i theta A(i lambda))). Radially symmetric potentials: F(eps z) = A_l F(z) A_l^{-1} for
eps^{k+2} = 1, so the lift moves by the element of (A_l, A_l); moreover the metric depends on |z| only.
"""
import logging
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .report import ResidualReport
from ..algebra.matrices import mat_exp
from ..algebra.psi import psi_matrix
from ..frames.extended_frame import FramePair, frame_at
from ..potentials import EquivariantPotential, SmythPotential, smyth_rotation
from ..surfaces.sample import lift_from_frames
from ..utils.errors import FrameHole, InvalidInput
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

DEFAULT_THETAS = (0.3,)
DEFAULT_ANGLES = (0.4, 1.3, 2.9)
NODE_STRIDE = 3
SAMPLE_TOLERANCE = 1e-12


def projective_distance(a, b):
    """min over complex mu of |a - mu b| / |a|."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    mu = np.vdot(b, a) / np.vdot(b, b)
    return float(np.linalg.norm(a - mu * b) / np.linalg.norm(a))


def _check_nodes(frames: FramePair, nodes: Optional[Iterable[Tuple[int, int]]]):
    if nodes is None:
        nx, ny = frames.grid.shape
        nodes = [(i, j) for i in range(1, nx - 1, NODE_STRIDE) for j in range(1, ny - 1, NODE_STRIDE)]
    nodes = list(nodes)
    for node in nodes:
        if frames.is_hole(*node):
            raise FrameHole(f"no frame at node {node}: {frames.holes[node]}")
    return nodes


def _lift_at(frames: FramePair, node, lam):
    z = frames.grid.points()[node]
    return lift_from_frames(frames.F_at(z, lam), frames.F_at(z, 1j * lam))


def _loop_value(loop, lam):
    """The sample at lam if lam is a sample, the trigonometric interpolant otherwise."""
    j = int(np.argmin(np.abs(loop.lambdas - lam)))
    if abs(loop.lambdas[j] - lam) < SAMPLE_TOLERANCE:
        return loop.values[j]
    return loop.at(lam)


def _factorized(potential, z, basepoint, lam, tolerances):
    """Lift and Iwasawa diagonal rho at z, from a fresh factorization."""
    result = frame_at(potential, z, basepoint, tolerances)
    lift = lift_from_frames(_loop_value(result.F, lam), _loop_value(result.F, 1j * lam))
    return lift, result.B.coefficient(0)[0, 0].real


def _translation(frames, potential, theta, lambdas, nodes, tolerances):
    worst = 0.0
    points = frames.grid.points()
    for lam in lambdas:
        move = psi_matrix(mat_exp(1j * theta * potential.matrix(lam)), mat_exp(1j * theta * potential.matrix(1j * lam)))
        for node in nodes:
            shifted, _ = _factorized(potential, points[node] + 1j * theta, frames.grid.basepoint, lam, tolerances)
            worst = max(worst, projective_distance(shifted, move @ _lift_at(frames, node, lam)))
    return worst


def _smyth_rotation(frames, potential, l, lambdas, nodes, tolerances):
    symmetry = smyth_rotation(potential.k, l)
    move = psi_matrix(symmetry.conjugator, symmetry.conjugator)
    worst = 0.0
    points = frames.grid.points()
    for lam in lambdas:
        for node in nodes:
            rotated, _ = _factorized(potential, symmetry.rotation * points[node], frames.grid.basepoint, lam, tolerances)
            worst = max(worst, projective_distance(rotated, move @ _lift_at(frames, node, lam)))
    return worst


def _radial_metric(frames, potential, angles, nodes, tolerances):
    """Relative spread of e^u = rho^4 + |c z^k|^2 rho^-4 along circles |z| = const."""
    worst = 0.0
    points = frames.grid.points()
    for node in nodes:
        z = points[node]
        rho = frames.rho[node]
        reference = rho ** 4 + abs(potential.c * z ** potential.k) ** 2 / rho ** 4
        for angle in angles:
            w = np.exp(1j * angle) * z
            _, rho_w = _factorized(potential, w, frames.grid.basepoint, 1.0, tolerances)
            value = rho_w ** 4 + abs(potential.c * w ** potential.k) ** 2 / rho_w ** 4
            worst = max(worst, abs(value - reference) / reference)
    return worst


def check_symmetry(
    frames: FramePair,
    kind: str,
    lambdas: Optional[Sequence[complex]] = None,
    thetas: Sequence[float] = DEFAULT_THETAS,
    l: int = 1,
    nodes: Optional[Iterable[Tuple[int, int]]] = None,
    angles: Sequence[float] = DEFAULT_ANGLES,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> ResidualReport:
    """
    `kind` is "equivariant" or "smyth". Frames at the moved points are factorized afresh with `frame_at`, so the
    comparison is between independent computations. Raises FrameHole if a checked node is a hole.
    """
    potential = frames.potential
    lambdas = [complex(lam) for lam in (lambdas if lambdas is not None else frames.lambdas[: frames.samples // 4])]
    nodes = _check_nodes(frames, nodes)
    report = ResidualReport(context={"kind": kind, "nodes": [list(node) for node in nodes]})
    if kind == "equivariant":
        if not isinstance(potential, EquivariantPotential):
            raise InvalidInput("translation symmetry needs frames of an R-equivariant potential")
        for theta in thetas:
            value = _translation(frames, potential, theta, lambdas, nodes, tolerances)
            report.add(f"translation[theta={theta:g}]", value, tolerances.frame)
    elif kind == "smyth":
        if not isinstance(potential, SmythPotential):
            raise InvalidInput("rotation symmetry needs frames of a radially symmetric potential")
        report.add(f"rotation[l={l}]", _smyth_rotation(frames, potential, l, lambdas, nodes, tolerances), tolerances.frame)
        report.add("radial_metric", _radial_metric(frames, potential, angles, nodes, tolerances), tolerances.frame)
    else:
        raise InvalidInput(f"unknown symmetry kind {kind!r}")
    logger.info("symmetry check (%s) on %d nodes: %s", kind, len(nodes), "pass" if report.passed else "fail")
    return report
