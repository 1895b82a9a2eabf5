import numpy as np
import pytest

from minlag.elliptic import discriminant_roots, jacobi_sn, v_profile
from minlag.utils.errors import DegenerateDiscriminant, OutOfInterval

CATENOID_48 = (1.0, 6.0, -(47 ** 0.5))


def test_catenoid_roots():
    z1, z2 = discriminant_roots(*CATENOID_48)
    assert abs(z1 - (-20 - 4j * 11 ** 0.5)) < 1e-10
    assert abs(z2 - (-20 + 4j * 11 ** 0.5)) < 1e-10


@pytest.mark.parametrize("a, b, c", [CATENOID_48, (1.0, 2.0, 0.5), (1.0, 1.0, 0.3), (-1.5, 0.7, 1.1), (2.0, 1.0, 0.0), (1.0, 3.0, 0.0)])
def test_initial_values(a, b, c):
    profile = v_profile(a, b, c)
    assert abs(profile.v(0.0) - 2 * b) < 1e-9 * max(1, abs(b))
    assert abs(profile.v_prime(0.0) + 4 * b * c) < 1e-7 * max(1, abs(b * c))
    assert profile.ode_deviation < 1e-7


@pytest.mark.parametrize("a, b, c", [CATENOID_48, (1.0, 2.0, 0.5), (2.0, 1.0, 0.0)])
def test_profile_solves_the_ode(a, b, c):
    profile = v_profile(a, b, c)
    lower, upper = profile.interval
    x = np.linspace(max(lower, -3.0), min(upper, 3.0), 41)[1:-1] * 0.9
    v = profile.v(x)
    residual = profile.ode_residual(x)
    assert np.max(np.abs(residual) / (1 + v ** 4)) < 1e-8
    assert np.all(np.sign(v) == np.sign(b))


def test_catenoid_interval_ends_at_a_zero_and_a_pole():
    profile = v_profile(*CATENOID_48)
    lower, upper = profile.interval
    assert np.isfinite(lower) and np.isfinite(upper)
    assert lower < 0 < upper
    # v increases monotonically: it reaches zero on the left and blows up on the right
    assert abs(profile.v(lower + 1e-9)) < 1e-6
    assert profile.v(upper - 1e-6) > 1e3
    assert profile.v(lower - 1e-3) < 0
    assert profile.contains(0.0)
    with pytest.raises(OutOfInterval):
        profile.require(upper + 0.1)


def test_closed_form_matches_jacobi_sn():
    profile = v_profile(*CATENOID_48)
    x = np.array([-0.05, 0.0, 0.03])
    modulus = np.sqrt(profile.z1 / profile.z2)
    values = profile.root_z1 * jacobi_sn(profile.root_z2 * (x - profile.x0), modulus)
    assert np.allclose(values.real, profile.v(x))
    assert np.max(np.abs(values.imag)) < 1e-8


def test_symmetric_profile_without_c():
    profile = v_profile(2.0, 1.0, 0.0)
    x = np.array([0.1, 0.2, 0.3])
    assert np.allclose(profile.v(x), profile.v(-x), atol=1e-9)
    assert abs(profile.kappa1sq - profile.kappa2sq) < 1e-8 * max(1.0, profile.kappa2sq)


def test_degenerate_discriminant():
    with pytest.raises(DegenerateDiscriminant):
        v_profile(1.0, 1.0, 0.0)
