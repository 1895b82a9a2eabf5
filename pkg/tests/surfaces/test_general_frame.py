import numpy as np
import pytest

from minlag.algebra import ETA
from minlag.surfaces import (
    frame_invariants,
    general_frame_coefficients,
    invariants_from_lift,
    lift_frame,
    metric_split,
    minimal_flatness_residuals,
    minimal_frame_coefficients,
    structure_residuals,
    surface_grid,
)
from minlag.utils.differences import MARGIN, nanmax_abs
from minlag.utils.errors import DegenerateFrame

from .factories import equivariant_frames, geodesic_frames

FINE = dict(extent=0.2, steps=32)


def test_structure_conditions_hold_for_dpw_data():
    frames = equivariant_frames(**FINE)
    exact = frame_invariants(frames, frames.lambdas[2])
    residuals = structure_residuals(exact.u, exact.alpha, exact.beta, np.zeros_like(exact.alpha), frames.grid.spacing)
    scale = nanmax_abs(exact.e_u) ** 2
    # fourth-order stencils, second derivatives of u and alpha enter
    bound = 1e3 * frames.grid.spacing[0] ** 4
    for name, residual in residuals.items():
        assert nanmax_abs(residual) / scale < bound, name


def test_structure_conditions_hold_for_measured_data():
    frames = equivariant_frames(**FINE)
    surface = surface_grid(frames, 1.0)
    measured = invariants_from_lift(surface.lift, frames.grid.spacing)
    residuals = structure_residuals(measured.u, measured.alpha, measured.beta, measured.phi_min, frames.grid.spacing)
    scale = nanmax_abs(measured.e_u) ** 2
    for name, residual in residuals.items():
        assert nanmax_abs(residual) / scale < 1e-4, name


def test_structure_conditions_detect_inconsistent_data():
    x, y = np.meshgrid(np.linspace(0, 1, 21), np.linspace(0, 1, 21), indexing="ij")
    u = 0.3 * x + 0.1 * y ** 2
    alpha = 0.2 * (x + 1j * y) ** 2
    beta = np.sqrt(np.exp(2 * u) - np.abs(alpha) ** 2) * np.exp(0.5j * x)
    residuals = structure_residuals(u, alpha, beta, np.zeros_like(alpha), 0.05)
    assert nanmax_abs(residuals["first"]) < 1e-12
    assert nanmax_abs(residuals["second"]) > 1e-2
    assert nanmax_abs(residuals["family"]) > 1e-2

    residuals = structure_residuals(u, alpha, 0.5 * beta, np.zeros_like(alpha), 0.05)
    assert nanmax_abs(residuals["first"]) > 0.1


def test_general_frame_degenerates_on_the_geodesic_product():
    frames = geodesic_frames()
    exact = frame_invariants(frames, 1.0)
    with pytest.raises(DegenerateFrame):
        general_frame_coefficients(exact.u, exact.alpha, exact.beta, np.zeros_like(exact.alpha), frames.grid.spacing)


def test_general_coefficients_shape():
    frames = equivariant_frames()
    exact = frame_invariants(frames, 1.0)
    coefficients = general_frame_coefficients(
        exact.u, exact.alpha, exact.beta, np.zeros_like(exact.alpha), frames.grid.spacing
    )
    u_matrix, v_matrix = coefficients.maurer_cartan(np.exp(0.3j))
    assert u_matrix.shape == frames.grid.shape + (4, 4)
    inner = u_matrix[8, 8]
    # skew with respect to the (2, 2) form: eta U + U^T eta = 0
    assert np.allclose(ETA @ inner + inner.T @ ETA, 0)
    assert np.allclose(ETA @ v_matrix[8, 8] + v_matrix[8, 8].T @ ETA, 0)


def test_lift_frame_is_in_so22():
    frames = equivariant_frames(**FINE)
    surface = surface_grid(frames, 1.0)
    measured = invariants_from_lift(surface.lift, frames.grid.spacing)
    frame = lift_frame(surface.lift, frames.grid.spacing, measured.e_u, measured.alpha)
    # positions are known everywhere, the tangent columns need f_z
    assert np.isfinite(frame[..., :2]).all()
    assert np.isnan(frame[:MARGIN, :, :, 2:]).all()
    assert np.isnan(frame[:, -MARGIN:, :, 2:]).all()
    assert np.isfinite(frame[MARGIN:-MARGIN, MARGIN:-MARGIN]).all()
    inner = frame[4:-4, 4:-4]
    gram = np.swapaxes(inner, -1, -2) @ ETA @ inner
    assert np.max(np.abs(gram - ETA)) < 1e-5


def test_minimal_coefficients():
    frames = equivariant_frames(**FINE)
    exact = frame_invariants(frames, 1.0)
    h = frames.grid.spacing
    coefficients = minimal_frame_coefficients(exact.u, exact.alphahat, exact.betahat, h)
    assert np.allclose(2 * np.abs(coefficients.r) ** 2, exact.e_u + exact.betahat)
    high, _ = metric_split(exact.e_u, exact.alphahat)
    assert np.allclose(np.exp(coefficients.uhat), high)
    residuals = minimal_flatness_residuals(coefficients, h)
    scale = nanmax_abs(coefficients.r) ** 2
    for name, residual in residuals.items():
        assert nanmax_abs(residual) / scale < 1e-5, name


def test_minimal_flatness_detects_a_wrong_metric():
    frames = equivariant_frames(**FINE)
    exact = frame_invariants(frames, 1.0)
    h = frames.grid.spacing
    x = frames.grid.points().real
    u = exact.u + 0.5 * x ** 2
    betahat = np.sqrt(np.exp(2 * u) - np.abs(exact.alphahat) ** 2)
    residuals = minimal_flatness_residuals(minimal_frame_coefficients(u, exact.alphahat, betahat, h), h)
    assert nanmax_abs(residuals["q"]) > 1e-3
