import numpy as np
import pytest

from minlag.algebra import Su11Vector, poincare_project, su11_coordinates, vertex_image
from minlag.utils.errors import NotOnHyperboloid, WrongSheet


def test_vertex():
    assert poincare_project(Su11Vector(x1=1.0, x2=0.0, x3=0.0)) == 0


@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_geodesic(s):
    w = poincare_project(Su11Vector(x1=np.cosh(s), x2=np.sinh(s), x3=0.0))
    assert abs(w - np.tanh(s / 2)) < 1e-12


def test_errors():
    with pytest.raises(WrongSheet):
        poincare_project(Su11Vector(x1=-1.0, x2=0.0, x3=0.0))
    with pytest.raises(NotOnHyperboloid):
        poincare_project(Su11Vector(x1=2.0, x2=0.0, x3=0.0))


def test_lorentz_norm_and_matrix():
    x = Su11Vector(x1=np.cosh(0.3), x2=np.sinh(0.3) * np.cos(1), x3=np.sinh(0.3) * np.sin(1))
    assert abs(x.lorentz_norm() + 1) < 1e-12
    assert Su11Vector.from_matrix(x.to_matrix()) == x


def test_projection_is_injective():
    rng = np.random.default_rng(3)
    points = []
    for s, t in rng.uniform([0, 0], [2, 2 * np.pi], size=(50, 2)):
        x = Su11Vector(x1=np.cosh(s), x2=np.sinh(s) * np.cos(t), x3=np.sinh(s) * np.sin(t))
        points.append(poincare_project(x))
    points = np.array(points)
    distances = np.abs(points[:, None] - points[None, :]) + np.eye(len(points))
    assert np.all(np.abs(points) < 1)
    assert np.min(distances) > 0


def test_vertex_image_of_identity():
    assert np.allclose(su11_coordinates(vertex_image(np.eye(2))), [1, 0, 0])
