import numpy as np

from .iwasawa import DEFAULT_ORDER, solve_toeplitz_section
from .laurent import LaurentLoop, SampledLoop, fourier_coefficients
from ..algebra.matrices import inv2
from ..utils.errors import OutsideBigCell
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances


def birkhoff_plus_minus(phi: SampledLoop, order: int = DEFAULT_ORDER, tolerances: Tolerances = DEFAULT_TOLERANCES):
    """
    Splits Phi = Phi_- Phi_+ with Phi_- = Id + (negative powers) and Phi_+ holomorphic in the unit disk.

    P = Phi_+^{-1} solves the finite Toeplitz section of Phi; Phi_- is then Phi P.

    >>> minus, plus = birkhoff_plus_minus(SampledLoop.identity(16), order=4)
    >>> assert np.allclose(minus.coefficient(0), np.eye(2)) and np.allclose(plus.coefficient(0), np.eye(2))
    """
    order = min(order, (phi.samples - 1) // 2)
    twisted = phi.parity_residual() < tolerances.loop * max(1.0, float(np.max(np.abs(phi.values))))
    p = solve_toeplitz_section(fourier_coefficients(phi.values), order + 1)
    p_samples = np.einsum("jk,kab->jab", phi.lambdas[:, np.newaxis] ** np.arange(order + 1), p)
    plus = SampledLoop(inv2(p_samples)).to_laurent(order, twisted=twisted).positive_part()
    minus_loop = SampledLoop(phi.values @ p_samples).to_laurent(order, twisted=twisted)
    coeffs = minus_loop.coeffs.copy()
    coeffs[order + 1 :] = 0
    minus = LaurentLoop(coeffs, twisted=twisted)

    scale = max(1.0, float(np.max(np.abs(phi.values))))
    lambdas = phi.lambdas
    residual = float(np.max(np.abs(minus(lambdas) @ plus(lambdas) - phi.values))) / scale
    if residual >= tolerances.iwa:
        raise OutsideBigCell(f"Birkhoff factors do not reproduce the loop (residual {residual:.3g})")
    return minus, plus
