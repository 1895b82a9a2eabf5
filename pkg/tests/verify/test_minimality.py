import numpy as np
import pytest

from minlag.frames import diagonal_frame
from minlag.surfaces import surface_grid
from minlag.surfaces.sample import lift_from_frames
from minlag.utils.errors import NotHorizontal
from minlag.verify import beta_argument_spread, check_minimality

from ..surfaces.factories import diagonal_frames, equivariant_frames, square


def test_equivariant_surfaces_are_minimal():
    frames = equivariant_frames(extent=0.2, steps=32)
    for lam in (1.0, frames.lambdas[3]):
        report = check_minimality(surface_grid(frames, lam).lift, frames.grid.spacing)
        assert report.passed, report.to_json()


def test_diagonal_surface_is_minimal():
    frames = diagonal_frames(extent=0.3, steps=24)
    report = check_minimality(surface_grid(frames, 1j).lift, frames.grid.spacing)
    assert report.passed, report.to_json()


def test_non_conformal_parametrization_fails():
    grid = square(0.3, 24)
    points = grid.points()
    lift = np.empty(grid.shape + (4,), dtype=complex)
    for index in np.ndindex(*grid.shape):
        x, y = points[index].real, points[index].imag
        w = x + 1j * (y + 0.3 * x ** 2)
        lift[index] = lift_from_frames(diagonal_frame(w, 1.0), diagonal_frame(w, 1j))
    report = check_minimality(lift, grid.spacing)
    assert not report.passed
    assert not report["alpha_holomorphic"].passed


def test_pointwise_phase_is_rejected():
    frames = equivariant_frames(extent=0.2, steps=32)
    lift = surface_grid(frames, 1.0).lift
    y = frames.grid.points().imag
    with pytest.raises(NotHorizontal):
        check_minimality(lift * np.exp(0.5j * y)[..., np.newaxis], frames.grid.spacing)


def test_beta_argument_spread():
    e_u = np.ones(5)
    assert beta_argument_spread(np.full(5, 2 - 1j), e_u) < 1e-12
    # a sign change through a zero line keeps the argument modulo pi
    assert beta_argument_spread(np.array([1j, 0.5j, 0, -0.5j, -1j]), e_u) < 1e-12
    assert beta_argument_spread(np.exp(1j * np.array([0.0, 0.1, 0.3])), np.ones(3)) == pytest.approx(0.3)
    assert beta_argument_spread(np.array([1.0, 1e-9j]), np.ones(2)) == 0.0
    assert beta_argument_spread(np.zeros(4), np.ones(4)) == 0.0


def test_beta_argument_spread_ignores_the_largest_node():
    beta = np.array([2 * np.exp(0.1j), 1.0, np.exp(0.3j)])
    assert beta_argument_spread(beta, np.ones(3)) == pytest.approx(0.3)
    # across the cut at +-pi/2
    beta = np.exp(1j * np.array([np.pi / 2 - 0.05, np.pi / 2, -np.pi / 2 + 0.05]))
    assert beta_argument_spread(beta, np.ones(3)) == pytest.approx(0.1)
