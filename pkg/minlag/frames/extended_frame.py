"""
DPW step 2 on a rectangular grid: Phi is carried from node to node by the frame ODE and every node is factorized as
Phi = F B. Nodes at which the factorization fails (outside the big cell) become holes of the resulting `FramePair`.

Sweep order: the node nearest to the basepoint first, then its row outwards to the right and to the left, then
every column outwards from that row, upwards and downwards. Every node is warm-started from the node it was
reached from.
"""
import logging
from typing import Dict, Optional, Tuple

import numpy as np
from pydantic import conint, root_validator

from .frame_ode import propagate
from ..algebra.matrices import IDENTITY, su11_residual
from ..loops.iwasawa import iwasawa_su11
from ..loops.laurent import SampledLoop, fourier_coefficients, roots_of_unity
from ..potentials import Potential
from ..utils.errors import FrameHole, InvalidInput, OutsideBigCell
from ..utils.pydantic_base_model import CamelBaseModel
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

NODE_TOLERANCE = 1e-9
SAMPLE_TOLERANCE = 1e-12


class Grid(CamelBaseModel):
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    # number of intervals in each direction, the grid has steps + 1 nodes per axis
    steps: conint(ge=8)
    basepoint_x: float = 0.0
    basepoint_y: float = 0.0

    @root_validator(skip_on_failure=True)
    def ordered(cls, values):
        if values["x_max"] <= values["x_min"] or values["y_max"] <= values["y_min"]:
            raise ValueError("grid ranges must satisfy min < max")
        return values

    @property
    def xs(self):
        return np.linspace(self.x_min, self.x_max, self.steps + 1)

    @property
    def ys(self):
        return np.linspace(self.y_min, self.y_max, self.steps + 1)

    @property
    def spacing(self) -> Tuple[float, float]:
        return (self.x_max - self.x_min) / self.steps, (self.y_max - self.y_min) / self.steps

    @property
    def shape(self):
        return self.steps + 1, self.steps + 1

    @property
    def basepoint(self):
        return complex(self.basepoint_x, self.basepoint_y)

    def points(self):
        """Complex coordinates of the nodes, indexed [i, j] with x = xs[i], y = ys[j]."""
        return self.xs[:, np.newaxis] + 1j * self.ys[np.newaxis, :]

    def nearest(self, z):
        hx, hy = self.spacing
        i = int(np.clip(round((z.real - self.x_min) / hx), 0, self.steps))
        j = int(np.clip(round((z.imag - self.y_min) / hy), 0, self.steps))
        return i, j

    def index_of(self, z):
        """Index of the node at z; raises InvalidInput if z is no node."""
        z = complex(z)
        i, j = self.nearest(z)
        hx, hy = self.spacing
        if abs(self.xs[i] - z.real) > NODE_TOLERANCE * hx or abs(self.ys[j] - z.imag) > NODE_TOLERANCE * hy:
            raise InvalidInput(f"{z} is not a grid node")
        return i, j

    def sweep(self):
        """Pairs (node, predecessor) in sweep order; the first node has predecessor None."""
        i0, j0 = self.nearest(self.basepoint)
        order = [((i0, j0), None)]
        for step in (1, -1):
            for i in range(i0 + step, self.steps + 1 if step > 0 else -1, step):
                order.append(((i, j0), (i - step, j0)))
        for i in range(self.steps + 1):
            for step in (1, -1):
                for j in range(j0 + step, self.steps + 1 if step > 0 else -1, step):
                    order.append(((i, j), (i, j - step)))
        return order


class FramePair:
    """
    The extended frame F_lambda sampled at the nodes of a grid and at the M-th roots of unity; F_{i lambda} is the
    same data rotated by a quarter of the samples.

    `values` has shape (nx, ny, M, 2, 2) and is NaN at holes, `rho` holds the diagonal entry of B(0) = diag(rho, 1/rho)
    of the Iwasawa factor and `holes` maps node indices to the reason of the failure.
    """

    def __init__(
        self,
        grid: Grid,
        values,
        rho=None,
        holes: Optional[Dict[Tuple[int, int], str]] = None,
        potential: Optional[Potential] = None,
    ):
        values = np.asarray(values, dtype=complex)
        if values.shape[:2] != grid.shape or values.shape[3:] != (2, 2) or values.shape[2] % 4 != 0:
            raise InvalidInput(f"frame values of shape {values.shape} do not fit the grid {grid.shape}")
        self.grid = grid
        self.values = values
        self.rho = np.full(grid.shape, np.nan) if rho is None else np.asarray(rho, dtype=float)
        self.holes = dict(holes or {})
        self.potential = potential

    @property
    def samples(self):
        return self.values.shape[2]

    @property
    def lambdas(self):
        return roots_of_unity(self.samples)

    def is_hole(self, i, j):
        return (i, j) in self.holes

    def hole_mask(self):
        mask = np.zeros(self.grid.shape, dtype=bool)
        for i, j in self.holes:
            mask[i, j] = True
        return mask

    def loop(self, i, j) -> SampledLoop:
        if self.is_hole(i, j):
            raise FrameHole(f"no frame at node ({i}, {j}): {self.holes[(i, j)]}")
        return SampledLoop(self.values[i, j])

    def _sample_index(self, lam):
        """Index j with lambda_j = lam, or None if lam is no sample."""
        position = np.angle(lam) / (2 * np.pi) * self.samples
        j = int(round(position)) % self.samples
        if abs(self.lambdas[j] - lam) < SAMPLE_TOLERANCE:
            return j
        return None

    def at(self, lam):
        """(F_lambda, F_{i lambda}) on the whole grid, each of shape (nx, ny, 2, 2); interpolated between samples."""
        lam = complex(lam)
        if abs(abs(lam) - 1) > SAMPLE_TOLERANCE:
            raise InvalidInput(f"lambda = {lam} is not on the unit circle")
        j = self._sample_index(lam)
        if j is not None:
            return self.values[:, :, j], self.values[:, :, (j + self.samples // 4) % self.samples]
        return self._interpolate(lam), self._interpolate(1j * lam)

    def _interpolate(self, lam):
        spectrum = fourier_coefficients(np.moveaxis(self.values, 2, 0))
        order = (self.samples - 1) // 2
        powers = np.arange(-order, order + 1)
        weights = lam ** powers
        return np.einsum("k,kxyab->xyab", weights, spectrum[powers % self.samples])

    def F_at(self, z, lam):
        """F_lambda(z) at a grid node z."""
        i, j = self.grid.index_of(z)
        if self.is_hole(i, j):
            raise FrameHole(f"no frame at z = {z}: {self.holes[(i, j)]}")
        j_lam = self._sample_index(complex(lam))
        if j_lam is not None:
            return self.values[i, j, j_lam]
        return self.loop(i, j).at(lam)

    def su11_residual(self):
        valid = ~self.hole_mask()
        if not np.any(valid):
            return 0.0
        return su11_residual(self.values[valid])

    def basepoint_residual(self):
        i, j = self.grid.nearest(self.grid.basepoint)
        if abs(self.grid.points()[i, j] - self.grid.basepoint) > NODE_TOLERANCE or self.is_hole(i, j):
            return 0.0
        return float(np.max(np.abs(self.values[i, j] - IDENTITY)))

    @classmethod
    def from_function(cls, grid: Grid, samples: int, frame, rho=None, potential=None):
        """Frames given in closed form: frame(z, lambdas) returns the (M, 2, 2) array of F_lambda(z)."""
        lam = roots_of_unity(samples)
        values = np.empty(grid.shape + (samples, 2, 2), dtype=complex)
        points = grid.points()
        for index in np.ndindex(*grid.shape):
            values[index] = frame(points[index], lam)
        rho_values = None if rho is None else np.vectorize(rho)(points)
        return cls(grid, values, rho_values, potential=potential)


def frame_at(
    potential: Potential,
    z: complex,
    basepoint: complex = 0.0,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
):
    """The Iwasawa result (F, B) of Phi(z) for the frame based at `basepoint`, computed along z0 -> Re z + i Im z0 -> z."""
    z, basepoint = complex(z), complex(basepoint)
    start = SampledLoop.identity(potential.samples)
    corner = complex(z.real, basepoint.imag)
    phi = propagate(potential, start, basepoint, corner, tolerances)
    phi = propagate(potential, phi, corner, z, tolerances)
    return iwasawa_su11(phi, order=potential.order, tolerances=tolerances)


def _factorize(phi, potential, tolerances, warm_start):
    """Iwasawa factors of phi; a warm start that leads outside the big cell is retried cold."""
    try:
        return iwasawa_su11(phi, order=potential.order, tolerances=tolerances, warm_start=warm_start)
    except OutsideBigCell:
        if warm_start is None:
            raise
    return iwasawa_su11(phi, order=potential.order, tolerances=tolerances)


def extended_frame(potential: Potential, grid: Grid, tolerances: Tolerances = DEFAULT_TOLERANCES) -> FramePair:
    """
    Runs DPW steps 1 and 2 on every node of the grid. Failures of the factorization are not fatal; they are logged
    and returned as holes.
    """
    samples = potential.samples
    values = np.full(grid.shape + (samples, 2, 2), np.nan, dtype=complex)
    rho = np.full(grid.shape, np.nan)
    holes = {}
    phis = {}
    factors = {}
    points = grid.points()

    for node, previous in grid.sweep():
        if previous is None:
            source, z_source = SampledLoop.identity(samples), grid.basepoint
        else:
            source, z_source = phis.get(previous), points[previous]
            if source is None:
                holes[node] = holes.get(previous, "holomorphic frame unavailable")
                continue
        try:
            phi = propagate(potential, source, z_source, points[node], tolerances)
        except (ValueError, ArithmeticError) as error:
            logger.warning("frame ODE failed at node %s: %s", node, error)
            holes[node] = str(error)
            continue
        phis[node] = phi
        try:
            result = _factorize(phi, potential, tolerances, factors.get(previous))
        except (ValueError, ArithmeticError) as error:
            logger.warning("Iwasawa factorization failed at z = %s: %s", points[node], error)
            holes[node] = str(error)
            continue
        factors[node] = result.B
        values[node] = result.F.values
        rho[node] = result.B.coefficient(0)[0, 0].real

    if holes:
        logger.warning("extended frame has %d holes on %d nodes", len(holes), grid.shape[0] * grid.shape[1])
    return FramePair(grid, values, rho, holes, potential)
