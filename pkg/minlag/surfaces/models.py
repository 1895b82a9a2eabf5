from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from pydantic import confloat, root_validator

from ..algebra.forms import hermitian_form, minkowski_form
from ..algebra.hyperbolic import Su11Vector
from ..frames.extended_frame import Grid
from ..utils.errors import FrameHole
from ..utils.pydantic_base_model import ComplexValue, FrozenCamelModel
from ..utils.tolerances import DEFAULT_TOLERANCES

LAMBDA_TOLERANCE = 1e-12


class SurfaceSample(FrozenCamelModel):
    z: ComplexValue
    # unnormalized representative of the point of Q2*, the horizontal lift is lift / sqrt(2)
    lift: Tuple[ComplexValue, ComplexValue, ComplexValue, ComplexValue]
    phi: Su11Vector
    psi: Su11Vector
    fmax: Tuple[float, float, float, float]
    normal: Tuple[float, float, float, float]
    u: float
    uhat: float
    alphahat: ComplexValue
    betahat: confloat(ge=0)
    hopf: ComplexValue

    @root_validator(skip_on_failure=True)
    def on_the_models(cls, values):
        tol = DEFAULT_TOLERANCES.geo
        lift = np.array(values["lift"], dtype=complex)
        scale = max(1.0, float(np.sum(np.abs(lift) ** 2)))
        if abs(minkowski_form(lift, lift)) > tol * scale or hermitian_form(lift, lift).real >= 0:
            raise ValueError("lift is not a point of Q2*")
        for name in ("phi", "psi"):
            point = values[name]
            if abs(point.lorentz_norm() + 1) > tol * max(1.0, point.x1 ** 2):
                raise ValueError(f"{name} is not on the hyperboloid")
        fmax, normal = np.array(values["fmax"]), np.array(values["normal"])
        scale = max(1.0, float(np.sum(fmax ** 2)), float(np.sum(normal ** 2)))
        if (
            abs(minkowski_form(fmax, fmax) + 1) > tol * scale
            or abs(minkowski_form(normal, normal) + 1) > tol * scale
            or abs(minkowski_form(fmax, normal)) > tol * scale
        ):
            raise ValueError("(fmax, N) is not a unit timelike orthonormal pair")
        return values


class FrameInvariants(NamedTuple):
    """
    Invariants read off the lambda^{-1} part of the Maurer-Cartan form, without differencing. Every field is an
    array over the grid (NaN at holes); the hatted quantities belong to the lift e^{i pi / 4} lift / sqrt(2).
    """

    e_u: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    e_uhat: np.ndarray
    alphahat: np.ndarray
    betahat: np.ndarray

    @property
    def u(self):
        return np.log(self.e_u)

    @property
    def uhat(self):
        return np.log(self.e_uhat)

    @property
    def hopf(self):
        """Hopf coefficient <(fmax)_zz, N> = i alphahat."""
        return 1j * self.alphahat


class SurfaceGrid:
    """
    The surface f^lambda on every node of a grid in all three models, together with its frame invariants.

    `lift` has shape (nx, ny, 4), `phi` and `psi` (nx, ny, 3) and `fmax`, `normal` (nx, ny, 4); holes are NaN.
    """

    def __init__(self, grid: Grid, lam, lift, phi, psi, fmax, normal, invariants: FrameInvariants, holes=None):
        self.grid = grid
        self.lam = complex(lam)
        self.lift = lift
        self.phi = phi
        self.psi = psi
        self.fmax = fmax
        self.normal = normal
        self.invariants = invariants
        self.holes = dict(holes or {})

    @property
    def spacing(self):
        return self.grid.spacing

    def hole_mask(self):
        mask = np.zeros(self.grid.shape, dtype=bool)
        for index in self.holes:
            mask[index] = True
        return mask

    def sample(self, i, j) -> SurfaceSample:
        if (i, j) in self.holes:
            raise FrameHole(f"no surface at node ({i}, {j}): {self.holes[(i, j)]}")
        invariants = self.invariants
        return SurfaceSample(
            z=self.grid.points()[i, j],
            lift=tuple(self.lift[i, j]),
            phi=Su11Vector(x1=self.phi[i, j, 0], x2=self.phi[i, j, 1], x3=self.phi[i, j, 2]),
            psi=Su11Vector(x1=self.psi[i, j, 0], x2=self.psi[i, j, 1], x3=self.psi[i, j, 2]),
            fmax=tuple(self.fmax[i, j]),
            normal=tuple(self.normal[i, j]),
            u=invariants.u[i, j],
            uhat=invariants.uhat[i, j],
            alphahat=invariants.alphahat[i, j],
            betahat=invariants.betahat[i, j],
            hopf=invariants.hopf[i, j],
        )

    def samples(self) -> List[SurfaceSample]:
        """All valid nodes in grid order."""
        return [self.sample(i, j) for i, j in np.ndindex(*self.grid.shape) if (i, j) not in self.holes]


class AssociatedFamily:
    """The surfaces f^lambda of one potential for a list of spectral parameters, keyed by position in `lambdas`."""

    def __init__(self, lambdas, surfaces: Dict[int, SurfaceGrid]):
        self.lambdas = [complex(lam) for lam in lambdas]
        self.surfaces = surfaces

    def __len__(self):
        return len(self.lambdas)

    def __iter__(self):
        for index, lam in enumerate(self.lambdas):
            yield lam, self.surfaces[index]

    def at(self, lam) -> Optional[SurfaceGrid]:
        for index, known in enumerate(self.lambdas):
            if abs(known - lam) < LAMBDA_TOLERANCE:
                return self.surfaces[index]
        return None

    def metric_variation(self):
        """Largest relative spread of e^u across the family, over all nodes."""
        stack = np.stack([surface.invariants.e_u for surface in self.surfaces.values()])
        with np.errstate(invalid="ignore"):
            spread = (np.nanmax(stack, axis=0) - np.nanmin(stack, axis=0)) / np.nanmax(np.abs(stack), axis=0)
        return float(np.nanmax(spread)) if np.any(np.isfinite(spread)) else 0.0

    def hopf_scaling_residual(self, reference: int = 0):
        """
        max |lambda^2 alphahat(lambda) / (lambda_ref^2 alphahat(lambda_ref)) - 1| over nodes with alphahat != 0.
        """
        base = self.surfaces[reference].invariants.alphahat * self.lambdas[reference] ** 2
        mask = np.abs(base) > LAMBDA_TOLERANCE
        worst = 0.0
        for index, lam in enumerate(self.lambdas):
            scaled = self.surfaces[index].invariants.alphahat * lam ** 2
            with np.errstate(invalid="ignore"):
                ratio = np.abs(scaled[mask] / base[mask] - 1)
            if ratio.size and np.any(np.isfinite(ratio)):
                worst = max(worst, float(np.nanmax(ratio)))
        return worst
