"""
Central finite differences on regular grids.

Grids are arrays whose first two axes are x and y (`values[i, j]` lives at `x0 + i*hx, y0 + j*hy`; a scalar h
stands for hx = hy). Trailing axes (vectors, matrices) are carried along. Derivatives use the fourth-order five-point
stencils, the two outermost rows and columns on each side are filled with NaN so that chained
derivatives propagate the missing border instead of silently using one-sided formulas.
"""
import numpy as np

MARGIN = 2


def _nan_like(values):
    return np.full(values.shape, np.nan, dtype=np.result_type(values.dtype, np.float64))


def _shifted(values, axis, offset):
    n = values.shape[axis]
    index = [slice(None)] * values.ndim
    index[axis] = slice(MARGIN + offset, n - MARGIN + offset)
    return values[tuple(index)]


def _steps(h):
    hx, hy = (h, h) if np.ndim(h) == 0 else h
    return float(hx), float(hy)


def _interior(axis, ndim):
    index = [slice(None)] * ndim
    index[axis] = slice(MARGIN, -MARGIN)
    return tuple(index)


def first_derivative(values, h, axis, order=4):
    """
    Derivative along `axis` (0 for x, 1 for y).

    >>> x = np.linspace(0.0, 1.0, 11)
    >>> grid = np.tile(x ** 3, (3, 1)).T
    >>> assert abs(first_derivative(grid, 0.1, 0)[5, 1] - 0.75) < 1e-12
    """
    values = np.asarray(values)
    out = _nan_like(values)
    if values.shape[axis] <= 2 * MARGIN:
        return out
    if order == 4:
        d = (
            _shifted(values, axis, -2) - 8 * _shifted(values, axis, -1) + 8 * _shifted(values, axis, 1) - _shifted(values, axis, 2)
        ) / (12 * h)
    else:
        d = (_shifted(values, axis, 1) - _shifted(values, axis, -1)) / (2 * h)
    out[_interior(axis, values.ndim)] = d
    return out


def second_derivative(values, h, axis, order=4):
    values = np.asarray(values)
    out = _nan_like(values)
    if values.shape[axis] <= 2 * MARGIN:
        return out
    if order == 4:
        d = (
            -_shifted(values, axis, -2)
            + 16 * _shifted(values, axis, -1)
            - 30 * _shifted(values, axis, 0)
            + 16 * _shifted(values, axis, 1)
            - _shifted(values, axis, 2)
        ) / (12 * h * h)
    else:
        d = (_shifted(values, axis, 1) - 2 * _shifted(values, axis, 0) + _shifted(values, axis, -1)) / (h * h)
    out[_interior(axis, values.ndim)] = d
    return out


def d_z(values, h, order=4):
    """Wirtinger derivative d/dz = (d/dx - i d/dy) / 2."""
    hx, hy = _steps(h)
    return 0.5 * (first_derivative(values, hx, 0, order) - 1j * first_derivative(values, hy, 1, order))


def d_zbar(values, h, order=4):
    """Wirtinger derivative d/dzbar = (d/dx + i d/dy) / 2."""
    hx, hy = _steps(h)
    return 0.5 * (first_derivative(values, hx, 0, order) + 1j * first_derivative(values, hy, 1, order))


def d_zz(values, h, order=4):
    hx, hy = _steps(h)
    fxx = second_derivative(values, hx, 0, order)
    fyy = second_derivative(values, hy, 1, order)
    fxy = first_derivative(first_derivative(values, hx, 0, order), hy, 1, order)
    return 0.25 * (fxx - fyy - 2j * fxy)


def d_zzbar(values, h, order=4):
    """A quarter of the Laplacian."""
    hx, hy = _steps(h)
    return 0.25 * (second_derivative(values, hx, 0, order) + second_derivative(values, hy, 1, order))


def error_estimate(values, h):
    """
    Richardson-style estimate of the differencing error of the first Wirtinger derivatives:
    the largest gap between the second- and fourth-order stencils over the valid interior.
    """
    gap_z = nanmax_abs(d_z(values, h, order=4) - d_z(values, h, order=2))
    gap_zbar = nanmax_abs(d_zbar(values, h, order=4) - d_zbar(values, h, order=2))
    return max(gap_z, gap_zbar)


def nanmax_abs(values):
    values = np.abs(np.asarray(values))
    if values.size == 0 or np.all(np.isnan(values)):
        return 0.0
    return float(np.nanmax(values))


def observed_order(coarse_residual, fine_residual, ratio=2.0):
    """Convergence order implied by two residuals computed at steps h and h/ratio."""
    return float(np.log(coarse_residual / fine_residual) / np.log(ratio))
