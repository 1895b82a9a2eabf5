from .params import ClosingParams, closing_number, solve_closing  # noqa: F401
from .monodromy import (  # noqa: F401
    AdsClosure,
    Diagonalization,
    Monodromy,
    ads3_closure,
    classify,
    diagonalization_residual,
    diagonalize_su11,
    monodromy,
    period_exponential,
)
from .profiles import ProfileCurves, profile_curves, rotation_law_residual  # noqa: F401
from .catenoid import EndDiagnostics, catenoid_metric, end_divergence  # noqa: F401
