from ._base import Potential  # noqa: F401
from ._type_helpers import potential_config_types  # noqa: F401
from .custom import CustomPotential  # noqa: F401
from .diagonal import DiagonalPotential  # noqa: F401
from .equivariant import EquivariantPotential  # noqa: F401
from .geodesic import GeodesicProductPotential  # noqa: F401
from .smyth import SmythPotential, SmythSymmetry, smyth_rotation  # noqa: F401

potential_config_types = potential_config_types()
