import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minlag.closing import (
    ads3_closure,
    classify,
    diagonalization_residual,
    diagonalize_su11,
    monodromy,
    period_exponential,
    solve_closing,
)
from minlag.potentials import EquivariantPotential
from minlag.utils.errors import InvalidInput, NotElliptic

from ..algebra.strategies import angles

LAMBDA0 = np.exp(1j * np.pi / 6)


@pytest.fixture(scope="module")
def catenoid():
    return solve_closing(4, 8, LAMBDA0, 1.0)


def test_catenoid_monodromies_are_the_identity(catenoid):
    for lam in (LAMBDA0, 1j * LAMBDA0):
        result = monodromy(catenoid.matrix, lam)
        assert result.classification == "plus_id"
        assert np.max(np.abs(result.matrix - np.eye(2))) < 1e-8


def test_odd_winding_number_gives_minus_identity():
    params = solve_closing(3, 6, LAMBDA0, 1.0)
    assert monodromy(params.matrix, LAMBDA0).classification == "minus_id"
    assert monodromy(params.matrix, 1j * LAMBDA0).classification == "plus_id"
    closure = ads3_closure(params)
    assert closure.sign == -1
    assert not closure.closed


def test_closure_of_the_worked_example(catenoid):
    closure = ads3_closure(catenoid)
    assert closure.sign == 1 and closure.closed


def test_generic_parameters_do_not_close():
    xi = EquivariantPotential(a=1.0, b=6.0, c=-7.0)
    result = monodromy(xi.matrix, LAMBDA0)
    assert result.classification == "nontrivial"
    assert result.sign == 0
    assert result.residual > 1e-3


def test_period_exponential():
    assert np.allclose(period_exponential(np.zeros((2, 2))), np.eye(2))
    assert np.allclose(period_exponential(np.diag([0.5, -0.5])), -np.eye(2))
    assert classify(-np.eye(2)).classification == "minus_id"


def test_diagonal_matrix_needs_no_conjugation():
    result = diagonalize_su11(np.diag([-2.0, 2.0]))
    assert np.allclose(result.conjugator.m, np.eye(2))
    assert result.mu == 2.0


def test_orientation_fixes_the_sign_of_mu():
    a_matrix = np.diag([2.0, -2.0])
    result = diagonalize_su11(a_matrix)
    assert result.mu == -2.0
    assert diagonalization_residual(a_matrix, result) < 1e-12


def test_catenoid_eigenvalues(catenoid):
    at_lambda0 = diagonalize_su11(catenoid.matrix(LAMBDA0))
    at_ilambda0 = diagonalize_su11(catenoid.matrix(1j * LAMBDA0))
    assert at_lambda0.mu == pytest.approx(2.0, abs=1e-10)
    assert at_ilambda0.mu == pytest.approx(4.0, abs=1e-10)
    assert diagonalization_residual(catenoid.matrix(LAMBDA0), at_lambda0) < 1e-8


@settings(max_examples=50, deadline=None)
@given(
    st.floats(min_value=0.2, max_value=3.0),
    angles,
    angles,
    st.floats(min_value=-1.0, max_value=1.0),
)
def test_random_elliptic_matrices(mu, a, b, s):
    rotation_a = np.diag([np.exp(1j * a), np.exp(-1j * a)])
    rotation_b = np.diag([np.exp(1j * b), np.exp(-1j * b)])
    boost = np.array([[np.cosh(s), np.sinh(s)], [np.sinh(s), np.cosh(s)]])
    g = rotation_a @ boost @ rotation_b
    a_matrix = g @ np.diag([-mu, mu]) @ np.linalg.inv(g)
    result = diagonalize_su11(a_matrix)
    assert result.mu == pytest.approx(mu, rel=1e-8)
    assert diagonalization_residual(a_matrix, result) < 1e-8 * max(1.0, np.max(np.abs(a_matrix)))


@pytest.mark.parametrize("a_matrix", [[[1, 2], [-2, -1]], [[1, 1], [-1, -1]]])
def test_spacelike_and_lightlike_axes(a_matrix):
    with pytest.raises(NotElliptic):
        diagonalize_su11(np.array(a_matrix, dtype=complex))


def test_matrix_of_the_wrong_shape():
    with pytest.raises(InvalidInput):
        diagonalize_su11(np.diag([1j, -1j]))
