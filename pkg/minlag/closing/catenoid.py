"""
Metric and ends of the catenoid-type surfaces.

The metric 2 e^u |dz|^2 of an R-equivariant surface depends on x only: 2 e^u = (v^2 + 16 a^2 b^2 v^-2) / 2. The ends
sit where v runs into a zero or a pole, i.e. at the ends of the profile interval; they are complete iff
the integral of |v| + |v|^-1 diverges toward both of them.
"""
import logging
import math
from typing import NamedTuple, Tuple

import numpy as np
from scipy.integrate import quad

from .params import ClosingParams

logger = logging.getLogger(__name__)

HALVINGS = 24
# ratio of the last two increments of the partial sums above which an end counts as divergent
DIVERGENCE_RATIO = 0.75
QUAD_LIMIT = 200


class EndDiagnostics(NamedTuple):
    endpoint: float
    partial_sums: np.ndarray
    # slope of the partial sums against log(1 / distance to the end)
    slope: float
    consistent_with_completeness: bool


def catenoid_metric(params: ClosingParams, x):
    """
    2 e^u at the points x of the profile interval; the lower bound 4|ab| is attained where v^2 = 4|ab|.

    This is the metric of the surface the frames build, 2 e^u = (v^2 + 16 a^2 b^2 / v^2) / 2. The closed form
    (v^2 + 16 |ab| / v^2) / 8 belongs to another normalization and is not used here; for a b = +-1 the two differ
    by the constant factor 4.

    >>> from minlag.closing import solve_closing
    >>> params = solve_closing(4, 8, np.exp(1j * np.pi / 6), 1.0)
    >>> assert abs(catenoid_metric(params, 0.0) - 74.0) < 1e-6
    """
    params.profile.require(x)
    v = params.profile.v(x)
    return 0.5 * (v ** 2 + 16 * (params.a * params.b) ** 2 / v ** 2)


def _length_density(profile, x):
    v = abs(float(profile.v(x)))
    return v + 1 / v


def _end(params: ClosingParams, endpoint: float, halvings: int) -> EndDiagnostics:
    profile = params.profile
    if math.isinf(endpoint):
        # an unbounded interval has infinite length already: sum over [0, 2^k]
        marks = math.copysign(1.0, endpoint) * 2.0 ** np.arange(halvings + 1)
        distances = 1 / np.abs(marks)
    else:
        distances = abs(endpoint) * 2.0 ** -np.arange(halvings + 1)
        marks = endpoint - math.copysign(1.0, endpoint) * distances
    sums = np.empty(halvings + 1)
    total, start = 0.0, 0.0
    for k, mark in enumerate(marks):
        piece, _ = quad(lambda t: _length_density(profile, t), start, mark, limit=QUAD_LIMIT)
        total += abs(piece)
        sums[k] = total
        start = mark
    logs = np.log(1 / distances)
    half = halvings // 2
    slope = float(np.polyfit(logs[half:], sums[half:], 1)[0])
    increments = np.diff(sums)
    ratio = increments[-1] / increments[-2] if increments[-2] > 0 else 0.0
    consistent = bool(math.isinf(endpoint) or ratio > DIVERGENCE_RATIO)
    return EndDiagnostics(float(endpoint), sums, slope, consistent)


def end_divergence(params: ClosingParams, halvings: int = HALVINGS) -> Tuple[EndDiagnostics, EndDiagnostics]:
    """
    Partial sums of the length integral of |v| + |v|^-1 from 0 toward both ends of the profile interval, halving the
    distance to the end at every step. A logarithmically divergent integral grows linearly in the number of halvings,
    a convergent one stalls; the flags record which behavior the samples show, which is evidence, not proof.
    """
    low, high = params.profile.interval
    ends = (_end(params, low, halvings), _end(params, high, halvings))
    for end in ends:
        logger.info(
            "end at x = %.6g: slope %.3g, %s",
            end.endpoint,
            end.slope,
            "consistent with completeness" if end.consistent_with_completeness else "length looks finite",
        )
    return ends
