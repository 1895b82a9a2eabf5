from .forms import minkowski_form, hermitian_form  # noqa: F401
from .hyperbolic import Su11Vector, poincare_project, su11_coordinates, lorentz_dot, vertex_image  # noqa: F401
from .matrices import (  # noqa: F401
    IDENTITY,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    ETA,
    SU11Element,
    SO22Element,
    su11_residual,
    so22_residual,
    mat_exp,
    inv2,
    det2,
    dagger,
)
from .psi import psi_hom, psi_matrix, psi_algebra, matrix_coordinates, coordinates_to_matrix, rotation_block  # noqa: F401
