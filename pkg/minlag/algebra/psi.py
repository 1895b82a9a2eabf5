"""
The isomorphism (SU(1,1) x SU(1,1)) / Z2 -> SO0(2,2).

A pair (g, h) acts on the real four-space of matrices W = [[a, b], [conj(b), conj(a)]] by W -> g W h^{-1}.
The quadratic form -det W is preserved; in the coordinates (Re W11, Im W11, Re W21, Im W21) it reads
-x1^2 - x2^2 + x3^2 + x4^2. The basis W1..W4 dual to these coordinates is (Id, i*sigma3, sigma1, sigma2).
"""
import numpy as np

from .matrices import IDENTITY, SIGMA1, SIGMA2, SIGMA3, SO22Element, SU11Element, inv2

BASIS = np.stack([IDENTITY, 1j * SIGMA3, SIGMA1, SIGMA2])


def matrix_coordinates(m):
    """
    Complex-linear coordinates of 2x2 matrices in the basis (Id, i*sigma3, sigma1, sigma2).
    On the real four-space they are (Re W11, Im W11, Re W21, Im W21).

    >>> w = np.array([[1 + 2j, 3 - 1j], [3 + 1j, 1 - 2j]])
    >>> assert np.allclose(matrix_coordinates(w), [1, 2, 3, 1])
    """
    m = np.asarray(m, dtype=complex)
    trace = np.trace
    return np.stack(
        [
            0.5 * trace(m, axis1=-2, axis2=-1),
            -0.5j * trace(m @ SIGMA3, axis1=-2, axis2=-1),
            0.5 * trace(m @ SIGMA1, axis1=-2, axis2=-1),
            0.5 * trace(m @ SIGMA2, axis1=-2, axis2=-1),
        ],
        axis=-1,
    )


def coordinates_to_matrix(c):
    c = np.asarray(c, dtype=complex)
    return np.einsum("...k,kij->...ij", c, BASIS)


def psi_matrix(g, h):
    """The 4x4 matrix of W -> g W h^{-1} for raw (possibly stacked) 2x2 arrays; complex if g, h are complexified."""
    g = np.asarray(g, dtype=complex)
    h_inv = inv2(np.asarray(h, dtype=complex))
    images = np.einsum("...ij,kjl,...lm->...kim", g, BASIS, h_inv)
    # column k holds the coordinates of g W_k h^{-1}
    return np.swapaxes(matrix_coordinates(images), -1, -2)


def psi_algebra(x, y):
    """Differential of the isomorphism: the matrix of W -> x W - W y."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    images = np.einsum("...ij,kjl->...kil", x, BASIS) - np.einsum("kij,...jl->...kil", BASIS, y)
    return np.swapaxes(matrix_coordinates(images), -1, -2)


def psi_hom(g: SU11Element, h: SU11Element) -> SO22Element:
    """
    The SO0(2,2) element of the pair (g, h).

    >>> I = SU11Element(np.eye(2))
    >>> assert np.allclose(psi_hom(I, I).m, np.eye(4))
    >>> assert np.allclose(psi_hom(-I, -I).m, np.eye(4))
    """
    g = SU11Element.validate(g)
    h = SU11Element.validate(h)
    return SO22Element(np.real(psi_matrix(g.m, h.m)), identity_component=True)


def rotation_block(angle):
    """block-diag(Id2, [[cos, sin], [-sin, cos]]) which is psi of (diag(e^{i a}, e^{-i a}), same) for angle = 2a."""
    out = np.eye(4)
    out[2:, 2:] = [[np.cos(angle), np.sin(angle)], [-np.sin(angle), np.cos(angle)]]
    return out
