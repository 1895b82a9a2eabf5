import numpy as np
import pytest

from minlag.algebra import ETA
from minlag.surfaces import frame_invariants, metric_split
from minlag.utils.errors import GridTooCoarse, InvalidInput
from minlag.verify import check_flatness, connection_grids, hat_maurer_cartan, tilde_maurer_cartan

from ..surfaces.factories import diagonal_frames, equivariant_frames

LAMBDAS = [1.0, np.exp(1j * np.pi / 7), 1j, np.exp(2.1j)]


def minimal_data(frames):
    base = frame_invariants(frames, 1.0)
    high, _ = metric_split(base.e_u, base.alphahat)
    return np.log(high), base.alphahat


def test_tilde_matrices_at_the_trivial_point():
    u_tilde, v_tilde = tilde_maurer_cartan(0.0, 0.0, 0.0, 1.0)
    s = 2 ** -0.5
    assert np.allclose(u_tilde[0, 2:], [-s, -1j * s])
    assert np.allclose(v_tilde[0, 2:], [-s, 1j * s])
    assert np.allclose(u_tilde[1], 0) and np.allclose(u_tilde[2:, 2:], 0)


def test_tilde_matrices_are_in_so22():
    u_tilde, v_tilde = tilde_maurer_cartan(0.3, 0.2 - 0.1j, 1.5 + 0.5j, np.exp(0.7j))
    for matrix in (u_tilde, v_tilde):
        assert np.allclose(ETA @ matrix + matrix.T @ ETA, 0)


def test_tilde_matrices_depend_on_lambda_squared():
    lam = np.exp(0.4j)
    plus = tilde_maurer_cartan(0.3, 0.2, 1.5 + 0.5j, lam)
    minus = tilde_maurer_cartan(0.3, 0.2, 1.5 + 0.5j, -lam)
    assert np.allclose(plus[0], minus[0]) and np.allclose(plus[1], minus[1])


def test_hat_companion():
    lam = np.exp(0.4j)
    u_hat, _ = hat_maurer_cartan(0.0, 0.0, 1.0, 1j * lam)
    # the pair of F_{i lambda} has real coefficients in front of lambda^{-1}
    assert np.isclose(u_hat[0, 1], -(2 ** -0.5) / lam)
    assert np.isclose(u_hat[1, 0], (2 ** -0.5) / lam)
    assert np.trace(u_hat) == 0


@pytest.mark.parametrize("kind", ["hat", "tilde"])
def test_equivariant_family_is_flat_for_all_lambda(kind):
    frames = equivariant_frames(extent=0.2, steps=32)
    uhat, alphahat = minimal_data(frames)
    report = check_flatness(connection_grids(uhat, alphahat, frames.grid.spacing, LAMBDAS, kind), frames.grid.spacing)
    assert report.passed, report.to_json()
    values = [check.value for check in report.checks]
    assert max(values) < 2 * min(values) + 1e-12


def test_diagonal_family_is_flat():
    frames = diagonal_frames(extent=0.3, steps=24)
    uhat, alphahat = minimal_data(frames)
    assert check_flatness(connection_grids(uhat, alphahat, frames.grid.spacing, LAMBDAS), frames.grid.spacing).passed


def test_constant_frames_are_flat():
    zero = np.zeros((12, 12, 2, 2))
    report = check_flatness({lam: (zero, zero) for lam in LAMBDAS}, 0.1)
    assert report.passed
    assert all(check.value == 0 for check in report.checks)


def test_holomorphy_breaking_perturbation_fails():
    frames = equivariant_frames(extent=0.2, steps=32)
    uhat, alphahat = minimal_data(frames)
    perturbed = alphahat + 0.1 * np.conj(frames.grid.points())
    report = check_flatness(connection_grids(uhat, perturbed, frames.grid.spacing, LAMBDAS), frames.grid.spacing)
    assert not report.passed
    assert min(check.value for check in report.checks) > 10 * report.checks[0].tol


def test_flatness_needs_three_lambdas():
    zero = np.zeros((12, 12, 2, 2))
    with pytest.raises(InvalidInput):
        check_flatness({1.0: (zero, zero), -1.0: (zero, zero)}, 0.1)
    with pytest.raises(InvalidInput):
        connection_grids(np.zeros((12, 12)), np.zeros((12, 12)), 0.1, LAMBDAS, kind="other")


def test_coarse_grid_is_rejected():
    x = np.linspace(0, 1, 21)[:, np.newaxis] * np.ones((1, 21))
    wavy = np.zeros((21, 21, 2, 2), dtype=complex)
    wavy[..., 0, 1] = np.sin(40 * x)
    with pytest.raises(GridTooCoarse):
        check_flatness({lam: (wavy, wavy) for lam in LAMBDAS}, 0.05)
