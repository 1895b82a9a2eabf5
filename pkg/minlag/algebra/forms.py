import numpy as np

SIGNATURE = np.array([-1.0, -1.0, 1.0, 1.0])


def minkowski_form(z, w):
    """
    The complex bilinear form <z, w> = -z1 w1 - z2 w2 + z3 w3 + z4 w4 on C^4, evaluated along the last axis.

    >>> e1, e3 = np.eye(4)[0], np.eye(4)[2]
    >>> minkowski_form(e1, e1), minkowski_form(e3, e3), minkowski_form(e1, e3)
    (-1.0, 1.0, 0.0)
    """
    return np.sum(SIGNATURE * np.asarray(z) * np.asarray(w), axis=-1)


def hermitian_form(z, w):
    """The Hermitian pairing (z, w) := <z, conj(w)>."""
    return minkowski_form(z, np.conj(w))
