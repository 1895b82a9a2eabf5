from typing import Union

from .diagonal import DiagonalPotential
from .equivariant import EquivariantPotential
from .geodesic import GeodesicProductPotential
from .smyth import SmythPotential


def potential_config_types():
    return Union[DiagonalPotential, GeodesicProductPotential, EquivariantPotential, SmythPotential]
