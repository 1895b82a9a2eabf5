import logging
from typing import Sequence

import numpy as np

from .appendix import check_appendix, harmonic_pair_data
from .correspondence import check_correspondence
from .maurer_cartan import check_flatness, connection_grids
from .minimality import check_minimality
from .report import ResidualReport
from .sinh_gordon import check_sinh_gordon
from .symmetry import check_symmetry
from ..frames.extended_frame import FramePair
from ..potentials import DiagonalPotential, EquivariantPotential, GeodesicProductPotential, SmythPotential
from ..surfaces import family_from_frames, frame_invariants, gaussian_curvature, metric_split
from ..utils.differences import nanmax_abs
from ..utils.errors import NotHorizontal, solver_failures
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

FLATNESS_LAMBDAS = (1.0, np.exp(1j * np.pi / 7), 1j, np.exp(2.1j))
# Gaussian curvature of the families with constant curvature
CONSTANT_CURVATURE = {DiagonalPotential: -2.0, GeodesicProductPotential: 0.0}
SYMMETRY_KINDS = {EquivariantPotential: "equivariant", SmythPotential: "smyth"}


def _symmetry_nodes(frames: FramePair):
    nx, ny = frames.grid.shape
    candidates = [(nx // 2, ny // 2), (nx // 3, 2 * ny // 3), (2 * nx // 3, ny // 4)]
    return [node for node in candidates if not frames.is_hole(*node)]


def verify_surface(
    frames: FramePair,
    lambdas: Sequence[complex],
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    symmetry: bool = True,
) -> ResidualReport:
    """
    Every check that applies to the surfaces of `frames`: per lambda minimality, the AdS3 correspondence and the
    H^2 x H^2 identities; once the sinh-Gordon equation, flatness over a lambda set, the isometry of the associated
    family and, depending on the potential, curvature and symmetry spot checks.
    """
    with solver_failures("verification"):
        return _verify(frames, lambdas, tolerances, symmetry)


def _verify(frames, lambdas, tolerances, symmetry):
    h = frames.grid.spacing
    lambdas = [complex(lam) for lam in lambdas]
    report = ResidualReport(
        context={
            "potential": type(frames.potential).__name__,
            "grid": list(frames.grid.shape),
            "lambdas": [[lam.real, lam.imag] for lam in lambdas],
            "holes": len(frames.holes),
        }
    )
    family = family_from_frames(frames, lambdas)
    for index, (lam, surface) in enumerate(family):
        prefix = f"lambda[{index}]."
        invariants = surface.invariants
        try:
            report = report.merge(check_minimality(surface.lift, h, tolerances), prefix)
        except NotHorizontal as error:
            logger.warning("lift at lambda = %s is not horizontal: %s", lam, error)
            report.add(prefix + "horizontal", float("inf"), tolerances.fd)
        correspondence = check_correspondence(surface.fmax, surface.normal, invariants.alphahat, invariants.u, h, tolerances)
        report = report.merge(correspondence, prefix)
        pair = harmonic_pair_data(surface.phi, surface.psi, h)
        appendix = check_appendix(invariants.u, invariants.alpha, invariants.beta, pair.gamma, pair.theta, h, tolerances)
        report = report.merge(appendix, prefix)

    base = frame_invariants(frames, 1.0)
    high, _ = metric_split(base.e_u, base.alphahat, tolerances)
    uhat = np.log(high)
    report = report.merge(check_sinh_gordon(uhat, base.alphahat, h, base.e_u, tolerances))
    flatness_lambdas = list(FLATNESS_LAMBDAS) + [lam for lam in lambdas if lam not in FLATNESS_LAMBDAS]
    report = report.merge(check_flatness(connection_grids(uhat, base.alphahat, h, flatness_lambdas), h, tolerances))
    report.add("isometry", family.metric_variation(), tolerances.geo)
    report.add("hopf_scaling", family.hopf_scaling_residual(), tolerances.geo)

    curvature = CONSTANT_CURVATURE.get(type(frames.potential))
    if curvature is not None:
        deviation = nanmax_abs(gaussian_curvature(base.e_u, h) - curvature)
        report.add("curvature", deviation, tolerances.fd)
    kind = SYMMETRY_KINDS.get(type(frames.potential))
    if symmetry and kind is not None:
        nodes = _symmetry_nodes(frames)
        report = report.merge(check_symmetry(frames, kind, lambdas=lambdas[:2], nodes=nodes, tolerances=tolerances))
    logger.info("verification: %d checks, %d failed", len(report.checks), len(report.failures()))
    return report
