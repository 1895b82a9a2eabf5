import numpy as np
import pytest

from minlag.algebra import su11_residual
from minlag.loops import LaurentLoop, SampledLoop, loop_inv, loop_mul, roots_of_unity
from minlag.utils.errors import InvalidInput, SingularSample, SizeMismatch

from .factories import random_unitary_loop


def random_twisted_loop(rng, order=8, size=0.2):
    coeffs = (rng.normal(size=(2 * order + 1, 2, 2)) + 1j * rng.normal(size=(2 * order + 1, 2, 2))) * size
    for index, k in enumerate(range(-order, order + 1)):
        if k % 2 == 0:
            coeffs[index, 0, 1] = coeffs[index, 1, 0] = 0
        else:
            coeffs[index, 0, 0] = coeffs[index, 1, 1] = 0
    return LaurentLoop(coeffs)


def test_twisted_validation():
    with pytest.raises(InvalidInput):
        LaurentLoop.from_dict({1: np.eye(2)})
    loop = LaurentLoop.from_dict({1: np.eye(2)}, twisted=False)
    assert loop.order == 1
    with pytest.raises(InvalidInput):
        LaurentLoop(np.zeros((2, 2, 2)))


def test_sampled_loop_validation():
    with pytest.raises(InvalidInput):
        SampledLoop(np.tile(np.eye(2), (6, 1, 1)))
    with pytest.raises(InvalidInput):
        SampledLoop(np.full((4, 2, 2), np.nan))


def test_identity_and_inverse():
    rng = np.random.default_rng(0)
    g = random_unitary_loop(rng)
    one = SampledLoop.identity(g.samples)
    assert np.allclose(loop_mul(one, g).values, g.values)
    assert np.max(np.abs(loop_mul(g, loop_inv(g)).values - np.eye(2))) < 1e-9
    assert loop_inv(g).su11_residual() < 1e-10


def test_inverse_of_diagonal_loop():
    lam = roots_of_unity(16)
    values = np.zeros((16, 2, 2), dtype=complex)
    values[:, 0, 0] = lam
    values[:, 1, 1] = 1 / lam
    inverse = loop_inv(SampledLoop(values))
    assert np.allclose(inverse.values[:, 0, 0], 1 / lam)
    assert np.allclose(inverse.values[:, 1, 1], lam)


def test_singular_sample():
    values = np.tile(np.eye(2, dtype=complex), (8, 1, 1))
    values[5] = 0
    with pytest.raises(SingularSample) as error:
        loop_inv(SampledLoop(values))
    assert error.value.index == 5


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        loop_mul(SampledLoop.identity(8), SampledLoop.identity(16))


def test_twisted_product_stays_twisted():
    rng = np.random.default_rng(1)
    a, b = random_twisted_loop(rng), random_twisted_loop(rng)
    product = loop_mul(a.sample(64), b.sample(64))
    assert product.parity_residual() < 1e-12
    assert product.to_laurent(16).parity_residual() == 0


def test_fourier_round_trip():
    rng = np.random.default_rng(2)
    loop = random_twisted_loop(rng)
    recovered = loop.sample(64).to_laurent(8)
    assert np.max(np.abs(recovered.coeffs - loop.coeffs)) < 1e-12
    assert np.allclose(loop.sample(64).at(np.exp(0.123j)), loop(np.exp(0.123j)))


def test_rotation_by_quarter_turn():
    rng = np.random.default_rng(3)
    loop = random_twisted_loop(rng)
    sampled = loop.sample(32)
    assert np.allclose(sampled.rotated(1).values, loop(1j * sampled.lambdas))


def test_su11_valued_loop():
    rng = np.random.default_rng(4)
    g = random_unitary_loop(rng)
    assert max(su11_residual(v) for v in g.values) < 1e-12


def test_json_layout():
    loop = LaurentLoop.from_dict({-1: [[0, 1 + 2j], [3, 0]], 0: np.eye(2)}, order=2)
    document = loop.to_json_model().dict()
    assert document["order"] == 2
    assert document["twisted"] is True
    assert document["coeffs"][0] == (-1, [0.0, 0.0, 1.0, 2.0, 3.0, 0.0, 0.0, 0.0])
    restored = LaurentLoop.from_json(loop.to_json())
    assert np.array_equal(restored.coeffs, loop.coeffs)


def test_positive_part():
    loop = LaurentLoop.from_dict({-1: [[0, 1], [1, 0]], 0: np.eye(2), 1: [[0, 2], [0, 0]]})
    assert not loop.is_positive()
    assert loop.positive_part().is_positive()
    assert np.allclose(loop.positive_part().coefficient(1), [[0, 2], [0, 0]])
