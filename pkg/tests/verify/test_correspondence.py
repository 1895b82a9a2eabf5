import numpy as np
import pytest

from minlag.surfaces import surface_grid
from minlag.verify import check_correspondence

from ..surfaces.factories import equivariant_frames, geodesic_frames


@pytest.fixture(scope="module")
def surface():
    frames = equivariant_frames(extent=0.2, steps=32)
    return surface_grid(frames, frames.lambdas[3])


def check(surface, fmax=None, normal=None, alphahat=None):
    invariants = surface.invariants
    return check_correspondence(
        surface.fmax if fmax is None else fmax,
        surface.normal if normal is None else normal,
        invariants.alphahat if alphahat is None else alphahat,
        invariants.u,
        surface.spacing,
    )


def test_maximal_surface_of_the_equivariant_family(surface):
    report = check(surface)
    assert report.passed, report.to_json()


def test_normal_is_the_other_maximal_surface(surface):
    report = check(surface, fmax=surface.normal, normal=surface.fmax)
    assert report.passed, report.to_json()


def test_geodesic_product_has_equal_roots():
    frames = geodesic_frames(extent=0.2, steps=32)
    surface = surface_grid(frames, np.exp(0.25j * np.pi))
    report = check(surface)
    assert report.passed, report.to_json()


def test_wrong_hopf_differential_fails(surface):
    report = check(surface, alphahat=2 * surface.invariants.alphahat)
    assert not report["hopf"].passed
    assert report["fmax_unit"].passed


def test_scaled_surface_leaves_the_quadric(surface):
    report = check(surface, fmax=1.01 * surface.fmax)
    assert not report["fmax_unit"].passed
    assert not report["sasaki"].passed


def test_differential_beyond_the_metric_has_no_split(surface):
    e_u = np.exp(surface.invariants.u)
    report = check(surface, alphahat=4 * e_u + 1j)
    assert not report["metric_split"].passed
    assert report["metric_split"].value == np.inf
    assert not report["hopf"].passed
    assert report["fmax_unit"].passed
