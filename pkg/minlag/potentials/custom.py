from typing import Callable

import numpy as np
from pydantic.types import constr

from ._base import Potential


class CustomPotential(Potential):
    """
    A potential given by a Python callable `function(z, lam)` returning xi(z, lambda) / dz with shape lam.shape + (2, 2).
    Custom potentials can only be created from code, they have no JSON representation.

    >>> xi = CustomPotential(function=lambda z, lam: np.zeros(np.shape(lam) + (2, 2)))
    >>> xi.coefficient(0.5, np.ones(4)).shape
    (4, 2, 2)
    """

    kind: constr(regex="^custom$") = "custom"
    function: Callable
    is_constant: bool = False

    class Config:
        @staticmethod
        def schema_extra(schema):
            # callables are not representable in JSON schema
            schema["properties"].pop("function", None)
            schema["required"] = [name for name in schema.get("required", []) if name != "function"]

    @property
    def constant(self):
        return self.is_constant

    def coefficient(self, z, lam):
        lam = np.asarray(lam, dtype=complex)
        return np.asarray(self.function(z, lam), dtype=complex).reshape(lam.shape + (2, 2))
