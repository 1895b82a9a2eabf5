"""
Jacobi elliptic functions sn, cn, dn for complex argument and complex parameter m = k^2.

The parameter is first moved into the region |m| <= 1, Re m >= 0, |1 - m| >= 1/2 by the reciprocal modulus,
imaginary modulus and Jacobi imaginary transformations. There the nome q = exp(-pi K'/K) is small and the functions
are quotients of theta series; K is computed by the arithmetic-geometric mean.
"""
import logging

import numpy as np

from ..utils.errors import NoConvergence

logger = logging.getLogger(__name__)

AGM_MAX_ITER = 60
THETA_MAX_TERMS = 60
THETA_CUTOFF = 1e-18
NEAR_ONE = 0.5
MAX_TRANSFORMS = 6


def agm(a, b, max_iter=AGM_MAX_ITER):
    """
    Arithmetic-geometric mean of complex numbers with the right choice of square roots
    (Re(b_n / a_n) >= 0 in every step).

    >>> assert abs(agm(1, 2 ** -0.5) - 0.8472130847939790866) < 1e-15
    """
    a, b = complex(a), complex(b)
    for _ in range(max_iter):
        if abs(a - b) <= 1e-15 * abs(a):
            return (a + b) / 2
        root = np.sqrt(a * b)
        a, b = (a + b) / 2, root
        if (b / a).real < 0:
            b = -b
    raise NoConvergence(f"AGM did not converge in {max_iter} iterations")


def ellipk_complex(m):
    """
    Complete elliptic integral of the first kind K(m) = pi / (2 agm(1, sqrt(1 - m))), principal branch.

    >>> assert abs(ellipk_complex(0) - np.pi / 2) < 1e-15
    >>> assert abs(ellipk_complex(0.5) - 1.8540746773013719) < 1e-14
    """
    m = complex(m)
    if m == 1:
        raise NoConvergence("K(m) diverges at m = 1")
    return np.pi / (2 * agm(1, np.sqrt(1 - m)))


def _theta_terms(q_power, count):
    n = np.arange(count)
    return n, np.exp(q_power * (n + 0.5) ** 2), np.exp(q_power * n ** 2)


def _term_count(nome):
    """Smallest number of theta terms whose tail is below THETA_CUTOFF."""
    log_q = np.log(abs(nome))
    for count in range(2, THETA_MAX_TERMS):
        if (count - 1) ** 2 * log_q < np.log(THETA_CUTOFF):
            return count
    raise NoConvergence(f"theta series with nome {abs(nome):.3g} need more than {THETA_MAX_TERMS} terms")


def _thetas(zeta, log_nome, count):
    """theta_1..theta_4 at (broadcast) zeta, with q = exp(log_nome)."""
    zeta = np.asarray(zeta, dtype=complex)[..., np.newaxis]
    n, half, whole = _theta_terms(log_nome, count)
    odd = 2 * n + 1
    sign = (-1.0) ** n
    theta1 = 2 * np.sum(sign * half * np.sin(odd * zeta), axis=-1)
    theta2 = 2 * np.sum(half * np.cos(odd * zeta), axis=-1)
    even = 2 * n[1:]
    theta3 = 1 + 2 * np.sum(whole[1:] * np.cos(even * zeta), axis=-1)
    theta4 = 1 + 2 * np.sum(sign[1:] * whole[1:] * np.cos(even * zeta), axis=-1)
    return theta1, theta2, theta3, theta4


def _ellipfun_theta(u, m):
    """sn, cn, dn from theta quotients; valid in the reduced parameter region."""
    k_value = ellipk_complex(m)
    k_prime = ellipk_complex(1 - m)
    tau = 1j * k_prime / k_value
    if tau.imag <= 0:
        raise NoConvergence(f"nome of m = {m} lies outside the unit disk")
    log_nome = 1j * np.pi * tau
    count = _term_count(np.exp(log_nome))
    zero = _thetas(0.0, log_nome, count)
    t2, t3, t4 = zero[1], zero[2], zero[3]
    if abs((t2 / t3) ** 4 - m) > 1e-9 * max(1.0, abs(m)):
        raise NoConvergence(f"theta constants do not reproduce the parameter m = {m}")

    zeta = np.asarray(u, dtype=complex) / t3 ** 2
    # quasi-periods: zeta -> zeta + pi tau and zeta -> zeta + pi
    period = np.pi * tau
    n = np.round(zeta.imag / period.imag)
    zeta = zeta - n * period
    k = np.round(zeta.real / np.pi)
    zeta = zeta - k * np.pi
    theta1, theta2, theta3, theta4 = _thetas(zeta, log_nome, count)
    sn = (-1.0) ** k * (t3 / t2) * theta1 / theta4
    cn = (-1.0) ** (k + n) * (t4 / t2) * theta2 / theta4
    dn = (-1.0) ** n * (t4 / t3) * theta3 / theta4
    return sn, cn, dn


def ellipfun(u, m, depth=0):
    """
    (sn, cn, dn)(u | m) for complex u (scalar or array) and complex parameter m.

    >>> sn, cn, dn = ellipfun(0.3, 0.0)
    >>> assert abs(sn - np.sin(0.3)) < 1e-15 and abs(dn - 1) < 1e-15
    >>> sn, cn, dn = ellipfun(0.7, 0.36)
    >>> assert abs(sn ** 2 + cn ** 2 - 1) < 1e-13 and abs(0.36 * sn ** 2 + dn ** 2 - 1) < 1e-13
    """
    if depth > MAX_TRANSFORMS:
        raise NoConvergence(f"parameter m = {m} could not be reduced")
    u = np.asarray(u, dtype=complex)
    m = complex(m)
    if m == 0:
        return np.sin(u), np.cos(u), np.ones_like(u)
    if m == 1:
        return np.tanh(u), 1 / np.cosh(u), 1 / np.cosh(u)
    if abs(m) > 1:
        k = np.sqrt(m)
        sn, cn, dn = ellipfun(k * u, 1 / m, depth + 1)
        return sn / k, dn, cn
    if m.real < 0:
        root = np.sqrt(1 - m)
        sn, cn, dn = ellipfun(root * u, m / (m - 1), depth + 1)
        return sn / (root * dn), cn / dn, 1 / dn
    if abs(1 - m) < NEAR_ONE:
        sn, cn, dn = ellipfun(1j * u, 1 - m, depth + 1)
        return -1j * sn / cn, 1 / cn, dn / cn
    return _ellipfun_theta(u, m)


def jacobi_sn(u, k):
    """
    sn(u, k) with modulus k (parameter m = k^2).

    >>> assert abs(jacobi_sn(0.4, 1.0) - np.tanh(0.4)) < 1e-15
    """
    return ellipfun(u, complex(k) ** 2)[0]


def jacobi_cn(u, k):
    return ellipfun(u, complex(k) ** 2)[1]


def jacobi_dn(u, k):
    return ellipfun(u, complex(k) ** 2)[2]
