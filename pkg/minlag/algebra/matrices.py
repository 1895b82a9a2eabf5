"""
2x2 complex matrices, the group SU(1,1) and the 4x4 real group SO(2,2).

SU(1,1) is realized as the matrices g with det g = 1 and g^H sigma3 g = sigma3, i.e. [[a, b], [conj(b), conj(a)]]
with |a|^2 - |b|^2 = 1.
"""
import numpy as np
from scipy.linalg import expm

from ..utils.errors import InvalidInput, Overflow
from ..utils.tolerances import DEFAULT_TOLERANCES

IDENTITY = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
ETA = np.diag([-1.0, -1.0, 1.0, 1.0])

MAT_EXP_MAX_NORM = 50.0


def as_mat2c(m):
    """
    Returns `m` as a finite complex 2x2 (or stacked ...x2x2) array.

    >>> as_mat2c([[1, 0], [0, 1]]).dtype
    dtype('complex128')
    """
    m = np.asarray(m, dtype=complex)
    if m.shape[-2:] != (2, 2):
        raise InvalidInput(f"expected 2x2 matrices, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidInput("matrix has non-finite entries")
    return m


def dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def inv2(m):
    """Inverse of (stacked) 2x2 matrices via the adjugate."""
    m = np.asarray(m)
    det = m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    adj = np.empty_like(m)
    adj[..., 0, 0] = m[..., 1, 1]
    adj[..., 1, 1] = m[..., 0, 0]
    adj[..., 0, 1] = -m[..., 0, 1]
    adj[..., 1, 0] = -m[..., 1, 0]
    return adj / det[..., np.newaxis, np.newaxis]


def det2(m):
    m = np.asarray(m)
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def su11_residual(m):
    """
    max(|m^H sigma3 m - sigma3|, |det m - 1|); zero exactly for elements of SU(1,1).

    >>> su11_residual(np.eye(2))
    0.0
    >>> t = 0.7
    >>> assert su11_residual([[np.cosh(t), np.sinh(t)], [np.sinh(t), np.cosh(t)]]) < 1e-14
    """
    m = np.asarray(m, dtype=complex)
    gram = dagger(m) @ SIGMA3 @ m - SIGMA3
    return float(max(np.max(np.abs(gram)), np.max(np.abs(det2(m) - 1.0))))


def mat_exp(m):
    """
    Matrix exponential by scaling and squaring with Pade approximants (scipy), for one matrix or a stack.
    Matrices with norm beyond `MAT_EXP_MAX_NORM` are rejected since the result no longer has the documented accuracy.

    >>> assert np.allclose(mat_exp(np.zeros((2, 2))), np.eye(2))
    >>> assert np.allclose(mat_exp([[0, 0.5], [0, 0]]), [[1, 0.5], [0, 1]])
    """
    m = np.asarray(m, dtype=complex)
    norms = np.linalg.norm(m, ord=2, axis=(-2, -1))
    if np.any(norms > MAT_EXP_MAX_NORM):
        raise Overflow(f"matrix norm {float(np.max(norms)):.3g} exceeds {MAT_EXP_MAX_NORM}")
    if m.ndim == 2:
        return expm(m)
    flat = m.reshape((-1,) + m.shape[-2:])
    return np.stack([expm(block) for block in flat]).reshape(m.shape)


class SU11Element:
    """
    An element of SU(1,1), validated on construction.

    >>> g = SU11Element([[np.cosh(1), np.sinh(1)], [np.sinh(1), np.cosh(1)]])
    >>> assert np.allclose((g * g.inverse()).m, np.eye(2))
    """

    def __init__(self, m, tol=DEFAULT_TOLERANCES.alg):
        m = as_mat2c(m)
        residual = su11_residual(m)
        if residual >= tol * max(1.0, float(np.linalg.norm(m)) ** 2):
            raise InvalidInput(f"not in SU(1,1): residual {residual:.3g}")
        self.m = m

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def __modify_schema__(cls, field_schema):
        field_schema.update(title="SU11Element", type="array", minItems=2, maxItems=2)

    @classmethod
    def validate(cls, v):
        if isinstance(v, SU11Element):
            return v
        return cls(v)

    @classmethod
    def diagonal(cls, angle):
        """The U(1) element diag(e^{i angle}, e^{-i angle})."""
        return cls(np.diag([np.exp(1j * angle), np.exp(-1j * angle)]))

    @classmethod
    def from_disk_point(cls, w):
        """
        The boost sending the hyperboloid vertex i*sigma3 to the point with Poincare coordinate `w`.
        """
        w = complex(w)
        if abs(w) >= 1:
            raise InvalidInput("disk point must satisfy |w| < 1")
        scale = 1 / np.sqrt(1 - abs(w) ** 2)
        return cls(scale * np.array([[1, 1j * w], [-1j * np.conj(w), 1]]))

    def inverse(self):
        return SU11Element(SIGMA3 @ dagger(self.m) @ SIGMA3)

    def __mul__(self, other):
        return SU11Element(self.m @ other.m)

    def __neg__(self):
        return SU11Element(-self.m)


class SO22Element:
    """
    An element of SO(2,2) w.r.t. eta = diag(-1, -1, 1, 1).

    The identity-component flag is not recomputed: it is passed along by whoever builds the element
    (products of identity-component elements stay there).
    """

    def __init__(self, m, identity_component=True, tol=DEFAULT_TOLERANCES.alg):
        m = np.asarray(m, dtype=float)
        if m.shape != (4, 4) or not np.all(np.isfinite(m)):
            raise InvalidInput("expected a finite real 4x4 matrix")
        residual = so22_residual(m)
        if residual >= tol * max(1.0, float(np.linalg.norm(m)) ** 2):
            raise InvalidInput(f"not in SO(2,2): residual {residual:.3g}")
        self.m = m
        self.identity_component = identity_component

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def __modify_schema__(cls, field_schema):
        field_schema.update(
            title="SO22Element",
            type="array",
            items={"type": "array", "items": {"type": "number"}, "minItems": 4, "maxItems": 4},
            minItems=4,
            maxItems=4,
        )

    @classmethod
    def validate(cls, v):
        if isinstance(v, SO22Element):
            return v
        return cls(v)

    def __mul__(self, other):
        return SO22Element(self.m @ other.m, self.identity_component and other.identity_component)


def so22_residual(m):
    m = np.asarray(m)
    return float(max(np.max(np.abs(m.T @ ETA @ m - ETA)), abs(np.linalg.det(m) - 1.0)))
