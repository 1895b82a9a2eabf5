from .report import ResidualCheck, ResidualReport  # noqa: F401
from .maurer_cartan import tilde_maurer_cartan, hat_maurer_cartan, connection_grids, check_flatness  # noqa: F401
from .sinh_gordon import check_sinh_gordon, sinh_gordon_residual  # noqa: F401
from .minimality import check_minimality, beta_argument_spread  # noqa: F401
from .correspondence import check_correspondence  # noqa: F401
from .appendix import check_appendix, harmonic_pair_data, second_order_pde_residual  # noqa: F401
from .symmetry import check_symmetry, projective_distance  # noqa: F401
from .suite import verify_surface  # noqa: F401
