import numpy as np

from minlag.utils.differences import MARGIN, d_z, d_zbar, d_zz, d_zzbar, error_estimate, nanmax_abs, observed_order


def cubic_grid(hx=0.1, hy=0.05):
    x = -0.5 + hx * np.arange(11)
    y = 0.2 + hy * np.arange(13)
    z = x[:, np.newaxis] + 1j * y[np.newaxis, :]
    return z, z ** 2 * np.conj(z)


def test_wirtinger_derivatives_of_a_cubic():
    z, f = cubic_grid()
    inner = (slice(MARGIN, -MARGIN), slice(MARGIN, -MARGIN))
    h = (0.1, 0.05)
    assert np.allclose(d_z(f, h)[inner], (2 * z * np.conj(z))[inner])
    assert np.allclose(d_zbar(f, h)[inner], (z ** 2)[inner])
    assert np.allclose(d_zzbar(f, h)[inner], (2 * z)[inner])
    assert np.allclose(d_zz(f, h)[inner], (2 * np.conj(z))[inner])


def test_borders_are_nan():
    _, f = cubic_grid(0.1, 0.1)
    derivative = d_z(f, 0.1)
    assert np.all(np.isnan(derivative[:MARGIN]))
    assert np.all(np.isnan(derivative[:, -MARGIN:]))
    assert not np.any(np.isnan(derivative[MARGIN:-MARGIN, MARGIN:-MARGIN]))


def test_trailing_axes_are_carried():
    z, f = cubic_grid(0.1, 0.1)
    stacked = np.stack([f, 2 * f], axis=-1)
    assert np.allclose(d_zbar(stacked, 0.1)[..., 1], 2 * d_zbar(f, 0.1), equal_nan=True)


def test_error_estimate_and_order():
    x = np.linspace(0.0, 1.0, 21)
    grid = np.exp(x[:, np.newaxis] + 1j * x[np.newaxis, :])
    assert 0 < error_estimate(grid, 0.05) < 1e-2
    assert nanmax_abs(np.full(3, np.nan)) == 0.0
    assert abs(observed_order(4e-4, 1e-4) - 2.0) < 1e-12
