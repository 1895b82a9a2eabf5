"""
The minlag command line.

Exit codes: 0 success, 1 invalid configuration or parameters, 2 surfaces with holes (a sidecar lists them),
3 a verification check failed (the report is written anyway).
"""
import json
import logging
import math
import os

import click
import numpy as np
import pandas as pd
from pydantic import ValidationError

from .config import RunConfig, load_config
from .export import (
    holes_path,
    mesh_frame,
    profile_frame,
    write_csv,
    write_holes,
    write_mesh_json,
    write_profile_svg,
)
from ..closing import profile_curves, rotation_law_residual, solve_closing
from ..frames import build_frames
from ..surfaces import surface_grid
from ..utils.errors import MinlagError, solver_failures
from ..verify import ResidualReport, verify_surface

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_HOLES = 2
EXIT_FAILED = 3
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)
# the profile is sampled on this fraction of its interval, unbounded intervals are cut at +-PROFILE_SPAN
PROFILE_FRACTION = 0.95
PROFILE_SPAN = 3.0


def _load(ctx, path, **overrides) -> RunConfig:
    try:
        return load_config(path, **overrides)
    except (OSError, ValueError, ValidationError) as error:
        click.echo(f"invalid configuration: {error}", err=True)
        ctx.exit(EXIT_CONFIG)


def _frames(ctx, config: RunConfig):
    logger.info("building frames of the %s potential on %d x %d nodes", config.potential.kind, *config.grid.shape)
    try:
        with solver_failures("frames"):
            frames = build_frames(config.potential, config.grid, config.merged_tolerances, config.closed_form)
    except MinlagError as error:
        click.echo(f"cannot build frames: {error}", err=True)
        ctx.exit(EXIT_CONFIG)
    if frames.holes:
        logger.warning("%d of %d nodes are holes", len(frames.holes), frames.grid.shape[0] * frames.grid.shape[1])
    return frames


def _surface(ctx, frames, lam):
    try:
        with solver_failures(f"surface at lambda = {lam:.6g}"):
            return surface_grid(frames, lam)
    except MinlagError as error:
        click.echo(f"cannot build the surface: {error}", err=True)
        ctx.exit(EXIT_CONFIG)


def _write_mesh(table: pd.DataFrame, csv_path, json_path):
    if csv_path is None and json_path is None:
        click.echo(table.to_csv(index=False, float_format="%.16e"), nl=False)
    if csv_path is not None:
        write_csv(table, csv_path)
    if json_path is not None:
        write_mesh_json(table, json_path)


def _finish_with_holes(ctx, frames, mesh_path):
    if not frames.holes:
        return
    if mesh_path is not None:
        write_holes(frames.holes, holes_path(mesh_path))
    else:
        click.echo(json.dumps({"holes": [[i, j, reason] for (i, j), reason in sorted(frames.holes.items())]}), err=True)
    ctx.exit(EXIT_HOLES)


def _checks(config: RunConfig, frames, symmetry) -> ResidualReport:
    try:
        return verify_surface(frames, config.spectral_parameters, config.merged_tolerances, symmetry)
    except MinlagError as error:
        logger.warning("verification stopped: %s", error)
        report = ResidualReport(context={"potential": config.potential.kind, "error": str(error)})
        report.add("completed", math.inf, 1.0)
        return report


def _write_report(report: ResidualReport, path):
    text = report.to_json(indent=2, sort_keys=True)
    if path is None:
        click.echo(text)
    else:
        with open(path, "w") as handle:
            handle.write(text + "\n")
    for name in report.failures():
        click.echo(f"FAIL {name}: {report[name].value:.3g} >= {report[name].tol:.3g}", err=True)


def _suffixed(path, index):
    if path is None:
        return None
    stem, extension = os.path.splitext(path)
    return f"{stem}_l{index}{extension}"


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for debugging output")
def cli(verbose):
    """Minimal Lagrangian surfaces in the complex hyperbolic quadric by the loop group method."""
    logging.basicConfig(level=LOG_LEVELS[min(verbose, 2)], format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@click.option("--config", "config_path", required=True, help="JSON run configuration")
@click.option("--steps", type=int, help="replaces the grid steps of the configuration")
@click.option("--lambda", "lambdas", type=float, multiple=True, help="angle of lambda in radians, repeatable")
@click.option("--mesh-csv", help="mesh output path (CSV)")
@click.option("--mesh-json", help="mesh output path (JSON)")
@click.option("--report-json", help="also runs the checks of `minlag verify` and writes their report here")
@click.pass_context
def build(ctx, config_path, steps, lambdas, mesh_csv, mesh_json, report_json):
    """
    Builds the surfaces of a potential at every lambda and writes one mesh.

    The mesh is not checked unless --report-json is given; `minlag verify` runs the same checks on their own.
    """
    config = _load(
        ctx, config_path, steps=steps, lambdas=lambdas, mesh_csv=mesh_csv, mesh_json=mesh_json, report_json=report_json
    )
    frames = _frames(ctx, config)
    tables = [mesh_frame(_surface(ctx, frames, lam), index) for index, lam in enumerate(config.spectral_parameters)]
    _write_mesh(pd.concat(tables, ignore_index=True), config.outputs.mesh_csv, config.outputs.mesh_json)
    report = None
    if config.outputs.report_json is not None:
        report = _checks(config, frames, symmetry=True)
        _write_report(report, config.outputs.report_json)
    _finish_with_holes(ctx, frames, config.outputs.mesh_csv or config.outputs.mesh_json)
    if report is not None and not report.passed:
        ctx.exit(EXIT_FAILED)


@cli.command()
@click.option("--config", "config_path", required=True, help="JSON run configuration")
@click.option("--steps", type=int, help="replaces the grid steps of the configuration")
@click.option("--lambda", "lambdas", type=float, multiple=True, help="angle of lambda in radians, repeatable")
@click.option("--mesh-csv", help="base path of the meshes (CSV), suffixed with _l<index>")
@click.option("--mesh-json", help="base path of the meshes (JSON), suffixed with _l<index>")
@click.pass_context
def associate(ctx, config_path, steps, lambdas, mesh_csv, mesh_json):
    """Writes the associated family: one mesh per lambda."""
    config = _load(ctx, config_path, steps=steps, lambdas=lambdas, mesh_csv=mesh_csv, mesh_json=mesh_json)
    frames = _frames(ctx, config)
    for index, lam in enumerate(config.spectral_parameters):
        table = mesh_frame(_surface(ctx, frames, lam), index)
        _write_mesh(table, _suffixed(config.outputs.mesh_csv, index), _suffixed(config.outputs.mesh_json, index))
    _finish_with_holes(ctx, frames, config.outputs.mesh_csv or config.outputs.mesh_json)


@cli.command()
@click.option("--config", "config_path", required=True, help="JSON run configuration")
@click.option("--steps", type=int, help="replaces the grid steps of the configuration")
@click.option("--lambda", "lambdas", type=float, multiple=True, help="angle of lambda in radians, repeatable")
@click.option("--report-json", help="report output path")
@click.option("--symmetry/--no-symmetry", default=True, help="spot checks of the symmetries of the family")
@click.pass_context
def verify(ctx, config_path, steps, lambdas, report_json, symmetry):
    """Runs every check that applies to the family and writes the residual report."""
    config = _load(ctx, config_path, steps=steps, lambdas=lambdas, report_json=report_json)
    frames = _frames(ctx, config)
    report = _checks(config, frames, symmetry)
    _write_report(report, config.outputs.report_json)
    if not report.passed:
        ctx.exit(EXIT_FAILED)


@cli.command()
@click.option("--m", "m", type=click.IntRange(min=1), required=True, help="winding number at lambda0")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="winding number at i lambda0")
@click.option("--lambda0-arg", type=float, required=True, help="argument of lambda0 in radians")
@click.option("--a", "a", type=float, default=1.0, show_default=True)
@click.option("--sign-c", type=click.Choice(["-1", "1"]), default="-1", show_default=True)
@click.option("--x-samples", type=click.IntRange(min=2), default=200, show_default=True)
@click.option("--y", "y", type=float, default=0.01, show_default=True)
@click.option("--svg", "svg_path", help="profile curves output path (SVG)")
@click.option("--csv", "csv_path", help="profile curves output path (CSV)")
@click.option("--check-rotation", is_flag=True, help="verify the rotation law of the profile curves")
@click.pass_context
def catenoid(ctx, m, n, lambda0_arg, a, sign_c, x_samples, y, svg_path, csv_path, check_rotation):
    """Closing parameters and profile curves of a catenoid-type surface."""
    residual = None
    try:
        with solver_failures("catenoid profile"):
            params = solve_closing(m, n, np.exp(1j * lambda0_arg), a, int(sign_c))
            low, high = params.profile.interval
            low, high = max(low, -PROFILE_SPAN), min(high, PROFILE_SPAN)
            xs = np.linspace(PROFILE_FRACTION * low, PROFILE_FRACTION * high, x_samples)
            curves = profile_curves(params, xs, y)
            if check_rotation:
                residual = rotation_law_residual(params, xs, y)
    except MinlagError as error:
        click.echo(f"{type(error).__name__}: {error}", err=True)
        ctx.exit(EXIT_CONFIG)
    click.echo(f"b = {params.b!r}")
    click.echo(f"c = {params.c!r}")
    click.echo(f"interval = ({low!r}, {high!r})")
    if residual is not None:
        click.echo(f"rotation law residual = {residual:.3e}")
    table = profile_frame(curves)
    if csv_path is None and svg_path is None:
        click.echo(table.to_csv(index=False, float_format="%.16e"), nl=False)
    if csv_path is not None:
        write_csv(table, csv_path)
    if svg_path is not None:
        write_profile_svg(curves, svg_path)


cli.add_command(catenoid, name="profile")
