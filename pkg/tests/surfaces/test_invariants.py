import numpy as np
import pytest

from minlag.surfaces import frame_invariants, gaussian_curvature, invariants_from_lift, metric_split, surface_grid
from minlag.utils.differences import nanmax_abs
from minlag.utils.errors import DomainError, NotHorizontal

from .factories import diagonal_frames, equivariant_frames, geodesic_frames

FINE = dict(extent=0.2, steps=32)


def lift_invariants(frames, lam):
    surface = surface_grid(frames, lam)
    return invariants_from_lift(surface.lift, frames.grid.spacing), frame_invariants(frames, lam)


def relative_gap(a, b):
    return nanmax_abs(a - b) / nanmax_abs(b)


def test_diagonal_family_has_curvature_minus_two():
    frames = diagonal_frames(**FINE)
    measured, exact = lift_invariants(frames, frames.lambdas[3])
    assert relative_gap(measured.e_u, exact.e_u) < 1e-6
    assert nanmax_abs(measured.alpha) < 1e-7
    assert relative_gap(measured.beta, -1j * exact.e_u) < 1e-6
    assert nanmax_abs(gaussian_curvature(exact.e_u, frames.grid.spacing) + 2) < 1e-4
    assert nanmax_abs(gaussian_curvature(measured.e_u, frames.grid.spacing) + 2) < 1e-3


def test_geodesic_family_is_flat():
    frames = geodesic_frames(**FINE)
    measured, exact = lift_invariants(frames, 1.0)
    assert np.allclose(exact.e_u, 2.0)
    assert relative_gap(measured.e_u, exact.e_u) < 1e-6
    assert nanmax_abs(measured.beta) < 1e-6
    assert abs(np.nanmean(np.abs(measured.alpha)) - 2.0) < 1e-5
    assert nanmax_abs(gaussian_curvature(measured.e_u, frames.grid.spacing)) < 1e-4


@pytest.mark.parametrize("k", [0, 1, 6])
def test_equivariant_family_is_minimal(k):
    frames = equivariant_frames(**FINE)
    lam = frames.lambdas[k]
    measured, exact = lift_invariants(frames, lam)
    assert relative_gap(measured.e_u, exact.e_u) < 1e-6
    assert relative_gap(measured.alpha, exact.alpha) < 1e-6
    assert relative_gap(measured.beta, exact.beta) < 1e-6
    assert nanmax_abs(measured.phi_min) < 1e-5
    assert nanmax_abs(measured.horizontality) < 1e-6


def test_pointwise_phase_breaks_horizontality():
    frames = equivariant_frames(**FINE)
    surface = surface_grid(frames, 1.0)
    x = frames.grid.points().real
    with pytest.raises(NotHorizontal):
        invariants_from_lift(surface.lift * np.exp(1j * x)[..., np.newaxis], frames.grid.spacing)


def test_metric_split():
    assert metric_split(1.5, 0.0) == (3.0, 0.0)
    assert metric_split(2.0, 2.0) == (2.0, 2.0)
    high, low = metric_split(np.array([2.0, 3.0]), np.array([1.0, 2j]))
    assert np.allclose(high * low, [1.0, 4.0])
    assert np.allclose(high + low, [4.0, 6.0])
    with pytest.raises(DomainError):
        metric_split(1.0, 1.5)


def test_metric_split_matches_the_ads3_pair():
    frames = equivariant_frames(**FINE)
    exact = frame_invariants(frames, 1.0)
    high, low = metric_split(exact.e_u, exact.alphahat)
    # fmax carries 2|x|^2 and N carries 2|y|^2; which of them is the larger root depends on the sign of |x| - |y|
    pair = np.sort(np.stack([exact.e_uhat, 2 * exact.e_u - exact.e_uhat]), axis=0)
    assert np.allclose(pair[1], high)
    assert np.allclose(pair[0], low)
