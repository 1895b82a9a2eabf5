import numpy as np
import pytest
from pydantic import ValidationError

from minlag.closing import ClosingParams, closing_number, solve_closing
from minlag.utils.errors import DegenerateLambda0, InvalidInput, ZeroB

LAMBDA0 = np.exp(1j * np.pi / 6)


def test_worked_example():
    params = solve_closing(4, 8, LAMBDA0, 1.0, sign_c=-1)
    assert params.b == pytest.approx(6.0, rel=1e-12)
    assert abs(params.c ** 2 - 47) < 1e-12
    assert params.c < 0
    assert abs(params.profile.z1 - (-20 - 4j * 11 ** 0.5)) < 1e-10
    assert abs(params.profile.z2 - (-20 + 4j * 11 ** 0.5)) < 1e-10


@pytest.mark.parametrize("m, n, a, sign_c", [(4, 8, 1.0, -1), (4, 8, 1.0, 1), (2, 6, 1.0, -1), (3, 6, 1.0, -1)])
def test_closing_numbers_are_integers(m, n, a, sign_c):
    params = solve_closing(m, n, LAMBDA0, a, sign_c)
    assert max(params.closing_residuals()) < 1e-8
    assert round(closing_number(params.a, params.b, params.c, LAMBDA0), 10) == m
    assert round(closing_number(params.a, params.b, params.c, 1j * LAMBDA0), 10) == n


def test_potential_of_the_parameters():
    params = solve_closing(4, 8, LAMBDA0, 1.0)
    potential = params.potential(samples=32, order=15)
    assert (potential.a, potential.b, potential.c) == (params.a, params.b, params.c)
    assert np.allclose(params.matrix(LAMBDA0), potential.matrix(LAMBDA0))


def test_equal_winding_numbers_force_b_to_vanish():
    with pytest.raises(ZeroB):
        solve_closing(2, 2, LAMBDA0, 1.0)


def test_degenerate_lambda0():
    with pytest.raises(DegenerateLambda0):
        solve_closing(4, 8, np.exp(1j * np.pi / 4), 1.0)


@pytest.mark.parametrize("lambda0, a, sign_c", [(1.1 * LAMBDA0, 1.0, -1), (LAMBDA0, 0.0, -1), (LAMBDA0, 1.0, 0)])
def test_invalid_input(lambda0, a, sign_c):
    with pytest.raises(InvalidInput):
        solve_closing(4, 8, lambda0, a, sign_c)


def test_parameters_that_do_not_close_are_rejected():
    params = solve_closing(4, 8, LAMBDA0, 1.0)
    with pytest.raises(ValidationError):
        ClosingParams(m=4, n=8, lambda0=LAMBDA0, a=1.0, b=6.1, c=params.c, profile=params.profile)
    with pytest.raises(ValidationError):
        ClosingParams(m=0, n=8, lambda0=LAMBDA0, a=1.0, b=6.0, c=params.c, profile=params.profile)


def test_parameters_serialize_with_camel_case_keys():
    data = solve_closing(4, 8, LAMBDA0, 1.0).dict(by_alias=True)
    assert data["lambda0"] == LAMBDA0
    assert "rootZ1" in data["profile"] and "root_z1" not in data["profile"]
