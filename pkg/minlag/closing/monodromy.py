import logging
import math
from typing import Callable, NamedTuple

import numpy as np

from .params import ClosingParams
from ..algebra.matrices import IDENTITY, SU11Element, mat_exp
from ..utils.errors import InvalidInput, NotElliptic
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

PLUS_ID = "plus_id"
MINUS_ID = "minus_id"
NONTRIVIAL = "nontrivial"
# exp is evaluated on M / 2^k with |M / 2^k| <= 1 and squared back
SQUARING_NORM = 1.0


class Monodromy(NamedTuple):
    matrix: np.ndarray
    classification: str
    # distance to the nearer of +Id and -Id
    residual: float

    @property
    def sign(self):
        return {PLUS_ID: 1, MINUS_ID: -1}.get(self.classification, 0)


class Diagonalization(NamedTuple):
    conjugator: SU11Element
    mu: float


class AdsClosure(NamedTuple):
    lambda0: Monodromy
    ilambda0: Monodromy
    # the Q2* lift and fmax pick up this factor over one period z -> z + 2 pi i; 0 if it is not +-1
    sign: int

    @property
    def closed(self):
        return self.sign == 1


def period_exponential(a_matrix, period=2 * math.pi):
    """exp(i period A) by scaling and squaring, valid beyond the norm limit of `mat_exp`."""
    generator = 1j * period * np.asarray(a_matrix, dtype=complex)
    norm = np.linalg.norm(generator, ord=2)
    squarings = max(0, math.ceil(math.log2(norm / SQUARING_NORM))) if norm > 0 else 0
    result = mat_exp(generator / 2 ** squarings)
    for _ in range(squarings):
        result = result @ result
    return result


def classify(matrix, tolerances: Tolerances = DEFAULT_TOLERANCES) -> Monodromy:
    matrix = np.asarray(matrix, dtype=complex)
    plus = float(np.max(np.abs(matrix - IDENTITY)))
    minus = float(np.max(np.abs(matrix + IDENTITY)))
    residual = min(plus, minus)
    if residual >= tolerances.close:
        classification = NONTRIVIAL
    else:
        classification = PLUS_ID if plus <= minus else MINUS_ID
    return Monodromy(matrix, classification, residual)


def monodromy(
    a_of_lambda: Callable[[complex], np.ndarray], lam: complex, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Monodromy:
    """
    exp(2 pi i A(lam)), the holonomy of the frame of xi = A(lambda) dz along the period z -> z + 2 pi i.

    >>> from minlag.potentials import EquivariantPotential
    >>> xi = EquivariantPotential(a=1.0, b=6.0, c=-47 ** 0.5)
    >>> monodromy(xi.matrix, np.exp(1j * np.pi / 6)).classification
    'plus_id'
    """
    result = classify(period_exponential(a_of_lambda(complex(lam))), tolerances)
    logger.debug("monodromy at lambda = %s: %s (residual %.3g)", lam, result.classification, result.residual)
    return result


def diagonalize_su11(a_matrix, tolerances: Tolerances = DEFAULT_TOLERANCES) -> Diagonalization:
    """
    P in SU(1,1) with P^-1 A P = diag(-mu, mu) for A = [[c, w], [-conj(w), -c]] with c real and c^2 > |w|^2,
    i.e. i A in su(1,1) with a timelike axis. Conjugation in SU(1,1) keeps the time orientation, so mu has the sign
    of -c: mu = -sign(c) sqrt(c^2 - |w|^2).

        P = [[mu - c, w], [conj(w), mu - c]] / sqrt(2 mu (mu - c))

    >>> result = diagonalize_su11(np.diag([-2.0, 2.0]))
    >>> assert np.allclose(result.conjugator.m, np.eye(2)) and result.mu == 2.0
    """
    a_matrix = np.asarray(a_matrix, dtype=complex)
    c, w = a_matrix[0, 0], a_matrix[0, 1]
    scale = max(1.0, float(np.max(np.abs(a_matrix))))
    structure = max(abs(c.imag), abs(a_matrix[1, 1] + c), abs(a_matrix[1, 0] + np.conj(w)))
    if structure > tolerances.alg * scale:
        raise InvalidInput("expected a matrix [[c, w], [-conj(w), -c]] with real c")
    c = c.real
    radicand = c * c - abs(w) ** 2
    if radicand <= tolerances.alg * scale * scale:
        raise NotElliptic(f"c^2 - |w|^2 = {radicand:.3g}: the axis is not timelike")
    mu = -math.copysign(math.sqrt(radicand), c)
    shift = mu - c
    conjugator = np.array([[shift, w], [np.conj(w), shift]]) / math.sqrt(2 * mu * shift)
    return Diagonalization(SU11Element(conjugator, tol=tolerances.close * scale), mu)


def diagonalization_residual(a_matrix, result: Diagonalization):
    """|P^-1 A P - diag(-mu, mu)|."""
    p = result.conjugator
    conjugated = p.inverse().m @ np.asarray(a_matrix, dtype=complex) @ p.m
    return float(np.max(np.abs(conjugated - np.diag([-result.mu, result.mu]))))


def ads3_closure(params: ClosingParams, tolerances: Tolerances = DEFAULT_TOLERANCES) -> AdsClosure:
    """
    The monodromies at lambda0 and i lambda0, (-1)^m Id and (-1)^n Id for closing parameters. The Q2* surface is
    always periodic; the lift and the maximal surface in AdS3 change sign over a period when m and n have different
    parity.
    """
    at_lambda0 = monodromy(params.matrix, params.lambda0, tolerances)
    at_ilambda0 = monodromy(params.matrix, 1j * params.lambda0, tolerances)
    sign = at_lambda0.sign * at_ilambda0.sign
    logger.info("AdS3 closure for (m, n) = (%d, %d): sign %d", params.m, params.n, sign)
    return AdsClosure(at_lambda0, at_ilambda0, sign)
