import logging

import numpy as np

from ..utils.differences import error_estimate, nanmax_abs
from ..utils.errors import GridTooCoarse

logger = logging.getLogger(__name__)

# the Richardson estimate may exceed the residual tolerance by this factor before the grid is rejected
COARSENESS_FACTOR = 100.0


def scale_of(*arrays):
    return max(1.0, *(nanmax_abs(array) for array in arrays))


def normalized(residual, scale=1.0):
    """sup |residual| / scale over the nodes where the residual is defined."""
    residual = np.asarray(residual)
    if residual.size and np.all(np.isnan(residual)):
        raise GridTooCoarse("no interior node left for the finite-difference residual")
    return nanmax_abs(residual) / scale


def require_resolution(values, h, tol, scale=1.0, name="data"):
    estimate = error_estimate(values, h) / scale
    logger.debug("differencing error estimate of %s: %.3g", name, estimate)
    if estimate > COARSENESS_FACTOR * tol:
        raise GridTooCoarse(f"differencing error of {name} is about {estimate:.3g}; refine the grid")
    return estimate
