import json
import math
import os
from typing import List, Optional

import numpy as np
from pydantic import conlist, validator

from ..frames import Grid
from ..potentials import potential_config_types
from ..utils.pydantic_base_model import CamelBaseModel
from ..utils.tolerances import DEFAULT_TOLERANCES, Tolerances, TolerancesOverride

ANGLE_TOLERANCE = 1e-12


class OutputPaths(CamelBaseModel):
    mesh_csv: Optional[str] = None
    mesh_json: Optional[str] = None
    profile_svg: Optional[str] = None
    report_json: Optional[str] = None

    @validator("*")
    def writable(cls, v):
        if v is None:
            return v
        directory = os.path.dirname(os.path.abspath(v))
        if not os.path.isdir(directory) or not os.access(directory, os.W_OK):
            raise ValueError(f"cannot write to {v}")
        return v


class RunConfig(CamelBaseModel):
    """
    A run of the DPW pipeline: one potential, one grid and the spectral parameters lambda = e^{i angle}
    at which surfaces are built and checked.
    """

    potential: potential_config_types
    grid: Grid
    lambdas: conlist(float, min_items=1) = [0.0]
    outputs: OutputPaths = OutputPaths()
    tolerances: Optional[TolerancesOverride] = None
    closed_form: bool = True

    @validator("lambdas")
    def distinct_angles(cls, v):
        for index, angle in enumerate(v):
            for other in v[:index]:
                gap = math.remainder(angle - other, 2 * math.pi)
                if abs(gap) < ANGLE_TOLERANCE:
                    raise ValueError(f"angles {other} and {angle} give the same lambda")
        return v

    @property
    def spectral_parameters(self) -> List[complex]:
        return [complex(np.exp(1j * angle)) for angle in self.lambdas]

    @property
    def merged_tolerances(self) -> Tolerances:
        return DEFAULT_TOLERANCES.merged(self.tolerances)


def load_config(path, steps: Optional[int] = None, lambdas: Optional[List[float]] = None, **outputs) -> RunConfig:
    """
    Reads a JSON run configuration; `steps`, `lambdas` and output paths given here replace those of the file.
    """
    with open(path) as handle:
        data = json.load(handle)
    if steps is not None:
        data.setdefault("grid", {})["steps"] = steps
    if lambdas:
        data["lambdas"] = list(lambdas)
    overrides = {key: value for key, value in outputs.items() if value is not None}
    if overrides:
        data["outputs"] = {**data.get("outputs", {}), **OutputPaths(**overrides).dict(by_alias=True, exclude_none=True)}
    return RunConfig.parse_obj(data)
