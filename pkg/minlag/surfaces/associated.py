import logging
from typing import Sequence

from .models import AssociatedFamily
from .sample import surface_grid
from ..frames.explicit import build_frames
from ..frames.extended_frame import FramePair, Grid
from ..potentials import Potential
from ..utils.errors import InvalidInput
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)


def family_from_frames(frames: FramePair, lambdas: Sequence[complex]) -> AssociatedFamily:
    if not len(lambdas):
        raise InvalidInput("the associated family needs at least one lambda")
    surfaces = {index: surface_grid(frames, lam) for index, lam in enumerate(lambdas)}
    return AssociatedFamily(lambdas, surfaces)


def associated_family(
    potential: Potential,
    grid: Grid,
    lambdas: Sequence[complex],
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    closed_form: bool = True,
) -> AssociatedFamily:
    """
    The isometric family f^lambda of the surface of `potential`: the frames are computed once for all lambda samples,
    the surfaces are then read off at every requested lambda (off-sample values are interpolated).
    """
    frames = build_frames(potential, grid, tolerances, closed_form=closed_form)
    family = family_from_frames(frames, lambdas)
    logger.info("associated family of %s with %d members", type(potential).__name__, len(family))
    return family
