from .frame_ode import solve_frame_ode, propagate  # noqa: F401
from .extended_frame import Grid, FramePair, extended_frame, frame_at  # noqa: F401
from .explicit import (  # noqa: F401
    diagonal_frame,
    geodesic_frame,
    diagonal_frame_pair,
    geodesic_frame_pair,
    explicit_frame_equivariant,
    equivariant_frame,
    equivariant_frame_pair,
    f_integral,
    build_frames,
)
