import importlib
import logging

import numpy as np
import pytest
from pydantic import ValidationError

from minlag.algebra import su11_residual
from minlag.elliptic import v_profile
from minlag.frames import (
    Grid,
    build_frames,
    diagonal_frame,
    diagonal_frame_pair,
    equivariant_frame_pair,
    equivariant_frame,
    explicit_frame_equivariant,
    extended_frame,
    frame_at,
    geodesic_frame_pair,
)
from minlag.potentials import DiagonalPotential, EquivariantPotential, GeodesicProductPotential, SmythPotential, smyth_rotation
from minlag.utils.errors import BranchCut, FrameHole, InvalidInput, NoConvergence

CATENOID_48 = (1.0, 6.0, -(47 ** 0.5))


def square(extent, steps=8):
    return Grid(x_min=-extent, x_max=extent, y_min=-extent, y_max=extent, steps=steps)


def test_grid_validation():
    with pytest.raises(ValidationError):
        square(1.0, steps=4)
    with pytest.raises(ValidationError):
        Grid(x_min=1, x_max=0, y_min=0, y_max=1, steps=8)
    grid = Grid.parse_obj({"xMin": -1, "xMax": 1, "yMin": 0, "yMax": 2, "steps": 8})
    assert grid.spacing == (0.25, 0.25)
    assert grid.shape == (9, 9)


def test_sweep_visits_every_node_once():
    grid = Grid(x_min=-1, x_max=1, y_min=-0.5, y_max=1.5, steps=8, basepoint_x=0.3)
    order = grid.sweep()
    assert order[0] == (grid.nearest(0.3 + 0j), None)
    seen = set()
    for node, previous in order:
        assert previous is None or previous in seen
        assert node not in seen
        seen.add(node)
    assert len(seen) == 81


def test_numerical_frames_match_diagonal_closed_form():
    grid = square(0.6)
    frames = extended_frame(DiagonalPotential(), grid)
    closed = diagonal_frame_pair(grid)
    assert not frames.holes
    assert np.max(np.abs(frames.values - closed.values)) < 1e-6
    assert np.allclose(frames.rho, closed.rho, atol=1e-6)
    assert frames.basepoint_residual() < 1e-7
    assert frames.su11_residual() < 1e-7


def test_numerical_frames_match_geodesic_closed_form():
    grid = square(0.4)
    frames = extended_frame(GeodesicProductPotential(), grid)
    closed = geodesic_frame_pair(grid)
    assert np.max(np.abs(frames.values - closed.values)) < 1e-6
    assert np.allclose(frames.rho, 1.0, atol=1e-6)


def test_numerical_frames_match_equivariant_frames():
    xi = EquivariantPotential(a=1.0, b=1.0, c=0.3)
    grid = square(0.2)
    numeric = extended_frame(xi, grid)
    closed = build_frames(xi, grid)
    assert not numeric.holes
    assert np.max(np.abs(numeric.values - closed.values)) < 1e-6
    assert np.allclose(numeric.rho, closed.rho, atol=1e-6)


def test_equivariant_grid_through_the_origin():
    profile = v_profile(*CATENOID_48)
    grid = Grid(x_min=-0.02, x_max=0.02, y_min=-0.02, y_max=0.02, steps=8)
    frames = equivariant_frame_pair(profile, grid, samples=16)
    assert frames.su11_residual() < 1e-9
    points = grid.points()
    for i, j in [(4, 0), (4, 6), (1, 3), (7, 8)]:
        z = points[i, j]
        expected = equivariant_frame(profile, z.real, z.imag, frames.lambdas)
        assert np.max(np.abs(frames.values[i, j] - expected)) < 1e-9


def test_holes_outside_the_unit_disk(caplog):
    grid = square(1.5, steps=10)
    with caplog.at_level(logging.WARNING):
        frames = extended_frame(DiagonalPotential(), grid)
    radius = np.abs(grid.points())
    mask = frames.hole_mask()
    assert not mask[radius < 0.95].any()
    assert mask[radius > 1.1].all()
    assert "holes" in caplog.text
    with pytest.raises(FrameHole):
        frames.F_at(1.5 + 1.5j, 1.0)


def test_frame_accessors():
    frames = diagonal_frame_pair(square(0.6))
    z = 0.3 - 0.15j
    lam = frames.lambdas[5]
    assert np.allclose(frames.F_at(z, lam), diagonal_frame(z, lam))
    off = np.exp(0.1j)
    assert np.allclose(frames.F_at(z, off), diagonal_frame(z, off))
    f_lam, f_ilam = frames.at(off)
    assert np.allclose(f_lam[6, 3], diagonal_frame(z, off))
    assert np.allclose(f_ilam[6, 3], diagonal_frame(z, 1j * off))
    with pytest.raises(InvalidInput):
        frames.F_at(0.31, 1.0)
    with pytest.raises(InvalidInput):
        frames.at(2.0)


def test_frame_at_single_point():
    result = frame_at(DiagonalPotential(), 0.3 + 0.4j)
    assert np.max(np.abs(result.F.values - diagonal_frame(0.3 + 0.4j, result.F.lambdas))) < 1e-6


def test_smyth_frames_follow_the_rotation():
    xi = SmythPotential(c=2.0, k=1, samples=32, order=8)
    symmetry = smyth_rotation(1, 1)
    z = 0.25 + 0.1j
    base = frame_at(xi, z).F.values
    rotated = frame_at(xi, symmetry.rotation * z).F.values
    conjugated = symmetry.conjugator @ base @ np.linalg.inv(symmetry.conjugator)
    assert np.max(np.abs(rotated - conjugated)) < 1e-6


@pytest.mark.parametrize("params, x, y", [((1.0, 1.0, 0.3), 0.15, 0.1), (CATENOID_48, -0.05, 0.2)])
def test_closed_form_matches_ode_frame(params, x, y):
    profile = v_profile(*params)
    for lam in np.exp(1j * np.array([0.4, 1.1, 2.5])):
        closed = explicit_frame_equivariant(profile, x, y, lam)
        integrated = equivariant_frame(profile, x, y, lam)
        scale = max(1.0, float(np.max(np.abs(integrated))))
        assert np.max(np.abs(closed - integrated)) < 1e-6 * scale
        assert su11_residual(closed) < 1e-6 * scale ** 2


def test_closed_form_at_the_basepoint():
    profile = v_profile(*CATENOID_48)
    for lam in np.exp(1j * np.linspace(0.1, 6.0, 7)):
        assert np.allclose(explicit_frame_equivariant(profile, 0.0, 0.0, lam), np.eye(2))


def test_closed_form_branch_cut():
    profile = v_profile(*CATENOID_48)
    # at lambda = i the denominator 4ab lambda^2 + v^2 vanishes where v^2 = 24, which v passes on its way to 0
    with pytest.raises(BranchCut):
        explicit_frame_equivariant(profile, 0.9 * profile.interval[0], 0.0, 1j)


def test_factorization_errors_become_holes(monkeypatch):
    module = importlib.import_module("minlag.frames.extended_frame")

    factorize = module.iwasawa_su11
    calls = []

    def failing_once(phi, **kwargs):
        calls.append(phi)
        if len(calls) == 3:
            raise np.linalg.LinAlgError("Singular matrix")
        return factorize(phi, **kwargs)

    monkeypatch.setattr(module, "iwasawa_su11", failing_once)
    frames = extended_frame(DiagonalPotential(samples=16, order=7), square(0.3))
    assert list(frames.holes.values()) == ["Singular matrix"]
    hole = next(iter(frames.holes))
    assert np.isnan(frames.values[hole]).all()
    assert frames.su11_residual() < 1e-7


def test_solver_errors_of_closed_forms(monkeypatch):
    explicit = importlib.import_module("minlag.frames.explicit")

    def broken(*args, **kwargs):
        raise ValueError("Values in t_eval are not properly sorted.")

    monkeypatch.setattr(explicit, "solve_ivp", broken)
    with pytest.raises(NoConvergence, match="equivariant frame integration"):
        build_frames(EquivariantPotential(a=1.0, b=1.0, c=0.3, samples=16, order=7), square(0.1))
