"""
Iwasawa factorization Phi = F B in the twisted loop group of SU(1,1).

F is SU(1,1)-valued on the unit circle and B extends holomorphically into the unit disk with B(0) diagonal, real
and positive. On the circle the Gram symbol G = Phi^H sigma3 Phi equals B^H sigma3 B, so B is a canonical factor of
G. X = B^{-1} is obtained from the finite section of the block Toeplitz system of G and then refined by damped
Gauss-Newton steps on the Fourier coefficients of B. The factorization only exists on the open big cell;
leaving it is reported as `OutsideBigCell`.
"""
import logging
from typing import Optional

import numpy as np
from scipy import linalg

from .laurent import LaurentLoop, SampledLoop, fourier_coefficients, parity_mask
from ..algebra.matrices import SIGMA3, dagger, det2, inv2
from ..utils.errors import OutsideBigCell
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 16
DEFAULT_SAMPLES = 64
MAX_ITER = 50
MAX_HALVINGS = 30
TOEPLITZ_MAX_CONDITION = 1e13


class IwasawaResult:
    def __init__(self, F: SampledLoop, B: LaurentLoop, residual: float, iterations: int = 0):
        self.F = F
        self.B = B
        self.residual = residual
        self.iterations = iterations

    def F_at_i(self):
        """F(i lambda) on the same sample points."""
        return self.F.rotated(1)


def block_toeplitz(spectrum, blocks):
    """The (2 blocks) x (2 blocks) matrix whose (n, j) block is the (n - j)-th Fourier coefficient."""
    samples = spectrum.shape[0]
    rows = [np.hstack([spectrum[(n - j) % samples] for j in range(blocks)]) for n in range(blocks)]
    return np.vstack(rows)


def solve_toeplitz_section(spectrum, blocks):
    """
    Solves sum_j S_{n-j} Y_j = delta_{n0} Id for n, j = 0..blocks-1 and returns Y as an array (blocks, 2, 2).
    """
    matrix = block_toeplitz(spectrum, blocks)
    condition = np.linalg.cond(matrix)
    if not np.isfinite(condition) or condition > TOEPLITZ_MAX_CONDITION:
        raise OutsideBigCell(f"Toeplitz section is singular (condition number {condition:.3g})")
    rhs = np.zeros((2 * blocks, 2), dtype=complex)
    rhs[:2] = np.eye(2)
    solution = linalg.solve(matrix, rhs)
    return solution.reshape(blocks, 2, 2)


def _vandermonde(lambdas, order):
    return lambdas[:, np.newaxis] ** np.arange(order + 1)


def _evaluate(coeffs, vandermonde):
    return np.einsum("jk,kab->jab", vandermonde, coeffs)


def _parameter_basis(order):
    """Unit perturbations of the free real parameters of a normalized twisted positive loop."""
    basis = []
    for k in range(order + 1):
        for a, b in zip(*np.nonzero(parity_mask(k))):
            for unit in ((1.0,) if k == 0 else (1.0, 1j)):
                basis.append((k, a, b, unit))
    return basis


def _pack(coeffs, basis):
    values = []
    for k, a, b, unit in basis:
        entry = coeffs[k, a, b]
        values.append(entry.real if unit == 1.0 else entry.imag)
    return np.array(values)


def _unpack(params, basis, order):
    coeffs = np.zeros((order + 1, 2, 2), dtype=complex)
    for value, (k, a, b, unit) in zip(params, basis):
        coeffs[k, a, b] += unit * value
    return coeffs


def _gram_residual(coeffs, vandermonde, gram):
    b = _evaluate(coeffs, vandermonde)
    return dagger(b) @ SIGMA3 @ b - gram


def _as_real_vector(residual):
    return np.concatenate([residual.real.ravel(), residual.imag.ravel()])


def _jacobian(coeffs, vandermonde, basis):
    b = _evaluate(coeffs, vandermonde)
    columns = []
    for k, a, c, unit in basis:
        db = np.zeros_like(b)
        db[:, a, c] = unit * vandermonde[:, k]
        columns.append(_as_real_vector(dagger(db) @ SIGMA3 @ b + dagger(b) @ SIGMA3 @ db))
    return np.stack(columns, axis=1)


def toeplitz_start(gram_spectrum, lambdas, order):
    """
    First approximation of the coefficients of B from the finite Toeplitz section of the Gram symbol.

    The λ^0 block of the solution is B_0^{-1} sigma3 B_0^{-H}; it must have signature (1, 1) with the positive
    entry first, otherwise Phi is not in the big cell.
    """
    y = solve_toeplitz_section(gram_spectrum, order + 1)
    y1, y2 = y[0, 0, 0], y[0, 1, 1]
    off = max(abs(y[0, 0, 1]), abs(y[0, 1, 0]))
    if not (abs(y1.imag) + abs(y2.imag) + off < 1e-6 * (abs(y1) + abs(y2)) and y1.real > 0 > y2.real):
        raise OutsideBigCell(f"zeroth Gram block has the wrong signature: diag({y1:.3g}, {y2:.3g})")
    r1, r2 = y1.real ** -0.5, (-y2.real) ** -0.5
    x = y @ np.diag([r1, -r2])
    b_samples = inv2(_evaluate(x, _vandermonde(lambdas, order)))
    spectrum = fourier_coefficients(b_samples)
    coeffs = np.stack([spectrum[k] * parity_mask(k) for k in range(order + 1)])
    coeffs[0] = np.diag(np.real(np.diag(coeffs[0])))
    return coeffs


def iwasawa_su11(
    phi: SampledLoop,
    order: int = DEFAULT_ORDER,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    max_iter: int = MAX_ITER,
    warm_start: Optional[LaurentLoop] = None,
) -> IwasawaResult:
    """
    Factorizes a twisted loop Phi (given by its samples) as F B.

    `warm_start` is the B factor of a nearby loop, e.g. the neighbouring point of a grid sweep; without it the
    Toeplitz section provides the starting point.
    """
    values = phi.values
    scale = max(1.0, float(np.max(np.abs(values))))
    if phi.parity_residual() >= tolerances.loop * scale:
        raise OutsideBigCell(f"loop is not twisted (parity residual {phi.parity_residual():.3g})")
    det_residual = float(np.max(np.abs(det2(values) - 1)))
    if det_residual >= tolerances.alg * scale ** 2:
        raise OutsideBigCell(f"loop is not SL(2)-valued (det residual {det_residual:.3g})")

    lambdas = phi.lambdas
    gram = dagger(values) @ SIGMA3 @ values
    gram_scale = max(1.0, float(np.max(np.abs(gram))))
    if 2 * order + 1 > phi.samples:
        order = (phi.samples - 1) // 2
    vandermonde = _vandermonde(lambdas, order)

    if warm_start is not None:
        coeffs = np.stack([warm_start.coefficient(k) * parity_mask(k) for k in range(order + 1)])
    else:
        coeffs = toeplitz_start(fourier_coefficients(gram), lambdas, order)

    basis = _parameter_basis(order)
    params = _pack(coeffs, basis)
    residual = _as_real_vector(_gram_residual(coeffs, vandermonde, gram))
    norm = np.linalg.norm(residual)
    target = 1e-2 * tolerances.iwa * gram_scale
    iterations = 0
    while np.max(np.abs(residual)) >= target and iterations < max_iter:
        iterations += 1
        jacobian = _jacobian(_unpack(params, basis, order), vandermonde, basis)
        step = np.linalg.lstsq(jacobian, -residual, rcond=None)[0]
        damping = 1.0
        for _ in range(MAX_HALVINGS):
            trial = params + damping * step
            trial_residual = _as_real_vector(_gram_residual(_unpack(trial, basis, order), vandermonde, gram))
            if np.linalg.norm(trial_residual) < norm:
                break
            damping /= 2
        else:
            logger.debug("line search stalled after %d iterations at residual %.3g", iterations, norm)
            break
        params, residual, norm = trial, trial_residual, np.linalg.norm(trial_residual)
        logger.debug("Gauss-Newton iteration %d: damping %.3g, residual %.3g", iterations, damping, norm)

    coeffs = _unpack(params, basis, order)
    gram_residual = float(np.max(np.abs(residual))) / gram_scale
    if gram_residual >= tolerances.iwa:
        raise OutsideBigCell(f"factorization did not converge: Gram residual {gram_residual:.3g} after {iterations} steps")
    b0 = np.diag(coeffs[0]).real
    if np.any(b0 <= 0):
        raise OutsideBigCell("normalization B(0) > 0 failed")

    b_samples = _evaluate(coeffs, vandermonde)
    frame = SampledLoop(values @ inv2(b_samples))
    full = np.zeros((2 * order + 1, 2, 2), dtype=complex)
    full[order:] = coeffs
    result = IwasawaResult(frame, LaurentLoop(full), max(gram_residual, frame.su11_residual()), iterations)
    logger.debug("Iwasawa factorization finished: %d iterations, residual %.3g", iterations, result.residual)
    return result
