"""
Static artifacts of a run: meshes as CSV and JSON, hole sidecars, profile curves as CSV and SVG.

Floats are written with 17 significant digits in lowercase scientific notation, rows in grid order, so that equal runs
give byte-identical files.
"""
import json
from typing import Dict, Iterable, Tuple

import numpy as np
import pandas as pd

from ..closing import ProfileCurves
from ..surfaces import SurfaceGrid

FLOAT_FORMAT = "%.16e"
SVG_SIZE = 800
SVG_MARGIN = 20
CURVE_COLORS = ("#1f77b4", "#d62728")
INTEGER_COLUMNS = ("lambda_index", "i", "j")

MESH_COLUMNS = (
    ["lambda_index", "i", "j", "x", "y"]
    + [f"lift{k}_{part}" for k in range(4) for part in ("re", "im")]
    + [f"phi{k}" for k in range(1, 4)]
    + [f"psi{k}" for k in range(1, 4)]
    + [f"fmax{k}" for k in range(4)]
    + [f"normal{k}" for k in range(4)]
    + ["u", "uhat", "alphahat_re", "alphahat_im", "betahat"]
)


def mesh_frame(surface: SurfaceGrid, lambda_index: int = 0) -> pd.DataFrame:
    """One row per valid node of the surface grid."""
    valid = ~surface.hole_mask()
    i, j = np.nonzero(valid)
    points = surface.grid.points()[valid]
    invariants = surface.invariants
    lift = surface.lift[valid]
    columns = [np.full(i.size, lambda_index), i, j, points.real, points.imag]
    for k in range(4):
        columns += [lift[:, k].real, lift[:, k].imag]
    columns += [surface.phi[valid][:, k] for k in range(3)]
    columns += [surface.psi[valid][:, k] for k in range(3)]
    columns += [surface.fmax[valid][:, k] for k in range(4)]
    columns += [surface.normal[valid][:, k] for k in range(4)]
    alphahat = invariants.alphahat[valid]
    columns += [invariants.u[valid], invariants.uhat[valid], alphahat.real, alphahat.imag, invariants.betahat[valid]]
    frame = pd.DataFrame(dict(zip(MESH_COLUMNS, columns)))
    return frame.astype({column: int for column in INTEGER_COLUMNS})


def write_csv(frame: pd.DataFrame, path):
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def write_mesh_json(frame: pd.DataFrame, path):
    """{"columns": [...], "data": [[...], ...]}, the rows of the CSV."""
    rows = [
        [int(value) if column in INTEGER_COLUMNS else float(value) for column, value in row.items()]
        for _, row in frame.iterrows()
    ]
    with open(path, "w") as handle:
        json.dump({"columns": list(frame.columns), "data": rows}, handle)
        handle.write("\n")


def holes_path(path):
    stem = str(path)
    if stem.endswith(".csv") or stem.endswith(".json"):
        stem = stem.rsplit(".", 1)[0]
    return stem + ".holes.json"


def write_holes(holes: Dict[Tuple[int, int], str], path):
    entries = [[int(i), int(j), reason] for (i, j), reason in sorted(holes.items())]
    with open(path, "w") as handle:
        json.dump({"holes": entries}, handle)
        handle.write("\n")


def profile_frame(curves: ProfileCurves) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "x": curves.x,
            "w1_re": curves.w1.real,
            "w1_im": curves.w1.imag,
            "w2_re": curves.w2.real,
            "w2_im": curves.w2.imag,
        }
    )


def _viewport(w):
    radius = SVG_SIZE / 2 - SVG_MARGIN
    return SVG_SIZE / 2 + radius * w.real, SVG_SIZE / 2 - radius * w.imag


def _polyline(points: Iterable[complex], color):
    coordinates = " ".join("{:.3f},{:.3f}".format(*_viewport(w)) for w in points)
    return f'<polyline points="{coordinates}" fill="none" stroke="{color}" stroke-width="1.5"/>'


def profile_svg(curves: ProfileCurves) -> str:
    """The unit disk mapped to an 800 x 800 viewport, its boundary and the curves w1 and w2 as polylines."""
    radius = SVG_SIZE / 2 - SVG_MARGIN
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<circle cx="{SVG_SIZE / 2:.3f}" cy="{SVG_SIZE / 2:.3f}" r="{radius:.3f}" fill="none" stroke="black"/>',
    ]
    for w, color in zip((curves.w1, curves.w2), CURVE_COLORS):
        lines.append(_polyline(w, color))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_profile_svg(curves: ProfileCurves, path):
    with open(path, "w") as handle:
        handle.write(profile_svg(curves))
