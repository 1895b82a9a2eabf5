"""
Truncated Laurent loops and loops sampled on the unit circle.

A loop g(lambda) = sum_{k=-N}^{N} g_k lambda^k is stored as the array of its coefficients; a sampled loop as its
values at the M-th roots of unity lambda_j = exp(2 pi i j / M). Twisted loops satisfy
sigma3 g(lambda) sigma3 = g(-lambda): even coefficients are diagonal, odd coefficients off-diagonal.
"""
import json
from typing import List, Tuple

import numpy as np
from pydantic import conint, conlist

from ..algebra.matrices import IDENTITY, SIGMA3, det2, inv2, su11_residual
from ..utils.errors import InvalidInput, SingularSample, SizeMismatch
from ..utils.pydantic_base_model import CamelBaseModel
from ..utils.tolerances import DEFAULT_TOLERANCES

DIAGONAL = np.array([[1, 0], [0, 1]], dtype=bool)
SINGULAR_DET = 1e-8


def parity_mask(k):
    """Entries of the k-th coefficient that a twisted loop may populate."""
    return DIAGONAL if k % 2 == 0 else ~DIAGONAL


class LaurentLoopJson(CamelBaseModel):
    order: conint(ge=0)
    twisted: bool
    # (k, [Re g11, Im g11, Re g12, Im g12, Re g21, Im g21, Re g22, Im g22])
    coeffs: List[Tuple[int, conlist(float, min_items=8, max_items=8)]]


class LaurentLoop:
    """
    A 2x2 matrix valued Laurent polynomial in lambda.

    >>> g = LaurentLoop.identity(2)
    >>> assert np.allclose(g(np.exp(0.3j)), np.eye(2))
    """

    def __init__(self, coeffs, twisted=True, tol=DEFAULT_TOLERANCES.loop):
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.ndim != 3 or coeffs.shape[1:] != (2, 2) or coeffs.shape[0] % 2 != 1:
            raise InvalidInput(f"expected coefficients of shape (2N+1, 2, 2), got {coeffs.shape}")
        if not np.all(np.isfinite(coeffs)):
            raise InvalidInput("loop has non-finite coefficients")
        self.coeffs = coeffs
        self.order = (coeffs.shape[0] - 1) // 2
        self.twisted = twisted
        if twisted and self.parity_residual() >= tol * max(1.0, float(np.max(np.abs(coeffs)))):
            raise InvalidInput(f"loop is not twisted: parity residual {self.parity_residual():.3g}")

    @classmethod
    def identity(cls, order):
        coeffs = np.zeros((2 * order + 1, 2, 2), dtype=complex)
        coeffs[order] = IDENTITY
        return cls(coeffs)

    @classmethod
    def from_dict(cls, mapping, order=None, twisted=True):
        """Builds a loop from {k: 2x2 matrix}."""
        order = max(abs(k) for k in mapping) if order is None else order
        coeffs = np.zeros((2 * order + 1, 2, 2), dtype=complex)
        for k, c in mapping.items():
            if abs(k) > order:
                raise InvalidInput(f"power {k} exceeds truncation order {order}")
            coeffs[k + order] = c
        return cls(coeffs, twisted=twisted)

    def powers(self):
        return np.arange(-self.order, self.order + 1)

    def coefficient(self, k):
        if abs(k) > self.order:
            return np.zeros((2, 2), dtype=complex)
        return self.coeffs[k + self.order]

    def parity_residual(self):
        residual = 0.0
        for k, c in zip(self.powers(), self.coeffs):
            forbidden = np.abs(c[~parity_mask(k)])
            residual = max(residual, float(np.max(forbidden, initial=0.0)))
        return residual

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=complex)
        weights = lam[..., np.newaxis] ** self.powers()
        return np.einsum("...k,kij->...ij", weights, self.coeffs)

    def sample(self, samples):
        return SampledLoop(self(roots_of_unity(samples)))

    def truncated(self, order):
        """Drops (or zero-pads) coefficients beyond `order`."""
        coeffs = np.zeros((2 * order + 1, 2, 2), dtype=complex)
        for k in range(-min(order, self.order), min(order, self.order) + 1):
            coeffs[k + order] = self.coeffs[k + self.order]
        return LaurentLoop(coeffs, twisted=self.twisted)

    def positive_part(self):
        """The k >= 0 part; a loop that extends holomorphically into the unit disk."""
        coeffs = self.coeffs.copy()
        coeffs[: self.order] = 0
        return LaurentLoop(coeffs, twisted=self.twisted)

    def is_positive(self, tol=DEFAULT_TOLERANCES.loop):
        return bool(np.max(np.abs(self.coeffs[: self.order]), initial=0.0) < tol)

    def to_json_model(self):
        entries = []
        for k, c in zip(self.powers(), self.coeffs):
            if np.any(c != 0):
                flat = c.reshape(-1)
                entries.append((int(k), [float(v) for pair in zip(flat.real, flat.imag) for v in pair]))
        return LaurentLoopJson(order=self.order, twisted=self.twisted, coeffs=entries)

    def to_json(self):
        return self.to_json_model().json()

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        model = LaurentLoopJson.parse_obj(data)
        mapping = {}
        for k, reals in model.coeffs:
            mapping[k] = (np.array(reals[0::2]) + 1j * np.array(reals[1::2])).reshape(2, 2)
        return cls.from_dict(mapping, order=model.order, twisted=model.twisted)


def roots_of_unity(samples):
    return np.exp(2j * np.pi * np.arange(samples) / samples)


class SampledLoop:
    """
    Values of a loop at the M-th roots of unity. M is a multiple of four so that lambda -> i lambda is the index shift M/4.

    >>> loop = SampledLoop(np.tile(np.eye(2), (8, 1, 1)))
    >>> loop.samples
    8
    """

    def __init__(self, values):
        values = np.asarray(values, dtype=complex)
        if values.ndim != 3 or values.shape[1:] != (2, 2):
            raise InvalidInput(f"expected values of shape (M, 2, 2), got {values.shape}")
        if values.shape[0] % 4 != 0 or values.shape[0] == 0:
            raise InvalidInput(f"sample count must be a positive multiple of 4, got {values.shape[0]}")
        if not np.all(np.isfinite(values)):
            raise InvalidInput("loop has non-finite samples")
        self.values = values

    @classmethod
    def identity(cls, samples):
        return cls(np.tile(IDENTITY, (samples, 1, 1)))

    @property
    def samples(self):
        return self.values.shape[0]

    @property
    def lambdas(self):
        return roots_of_unity(self.samples)

    def rotated(self, quarter_turns=1):
        """The loop lambda -> g(i^q lambda), an exact index rotation."""
        return SampledLoop(np.roll(self.values, -quarter_turns * self.samples // 4, axis=0))

    def to_laurent(self, order, twisted=True):
        """Discrete Fourier coefficients g_k = mean_j g(lambda_j) lambda_j^{-k} for |k| <= order."""
        if 2 * order + 1 > self.samples:
            raise SizeMismatch(f"order {order} needs at least {2 * order + 1} samples, got {self.samples}")
        spectrum = fourier_coefficients(self.values)
        coeffs = np.stack([spectrum[k % self.samples] for k in range(-order, order + 1)])
        if twisted:
            coeffs = coeffs * np.stack([parity_mask(k) for k in range(-order, order + 1)])
        return LaurentLoop(coeffs, twisted=twisted)

    def at(self, lam):
        """Trigonometric interpolation of the samples at an arbitrary point of the unit circle."""
        order = (self.samples - 1) // 2
        return self.to_laurent(order, twisted=False)(lam)

    def parity_residual(self):
        """max |sigma3 g(lambda) sigma3 - g(-lambda)|."""
        opposite = np.roll(self.values, -self.samples // 2, axis=0)
        return float(np.max(np.abs(SIGMA3 @ self.values @ SIGMA3 - opposite)))

    def su11_residual(self):
        return su11_residual(self.values)

    def __matmul__(self, other):
        return loop_mul(self, other)


def fourier_coefficients(values):
    """Coefficients indexed k mod M of the trigonometric polynomial through the samples."""
    return np.fft.fft(values, axis=0) / values.shape[0]


def loop_mul(a: SampledLoop, b: SampledLoop) -> SampledLoop:
    """
    Pointwise product.

    >>> one = SampledLoop.identity(4)
    >>> assert np.allclose(loop_mul(one, one).values, one.values)
    """
    if a.samples != b.samples:
        raise SizeMismatch(f"cannot multiply loops with {a.samples} and {b.samples} samples")
    return SampledLoop(a.values @ b.values)


def loop_inv(a: SampledLoop) -> SampledLoop:
    det = det2(a.values)
    singular = np.flatnonzero(np.abs(det) <= SINGULAR_DET)
    if singular.size:
        raise SingularSample(int(singular[0]))
    return SampledLoop(inv2(a.values))
