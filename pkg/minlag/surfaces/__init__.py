from .models import SurfaceSample, SurfaceGrid, FrameInvariants, AssociatedFamily  # noqa: F401
from .sample import surface_q2, surface_h2xh2, surface_ads3, surface_grid, frame_invariants  # noqa: F401
from .invariants import LiftInvariants, invariants_from_lift, gaussian_curvature, metric_split  # noqa: F401
from .general_frame import (  # noqa: F401
    GeneralFrameCoefficients,
    MinimalFrameCoefficients,
    general_frame_coefficients,
    structure_residuals,
    minimal_frame_coefficients,
    minimal_flatness_residuals,
    lift_frame,
)
from .associated import associated_family, family_from_frames  # noqa: F401
