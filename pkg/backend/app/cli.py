"""Command-line front end.

    python -m backend.app.cli --map backend/app/maps/all_terrain.map --mode segmented

Exit status: 0 plan produced, 2 bad arguments, 3 map parse error,
4 no path, 1 anything unexpected. Failures print one
``error: <CODE>: <message>`` line to stderr.
"""

import sys
from pathlib import Path as FilePath
from typing import Optional

import click
from loguru import logger

from .core.config import get_settings
from .core.exceptions import (
    EXIT_INTERNAL,
    EXIT_OK,
    NoPathError,
    ValidationError,
    WaveSelectException,
)
from .core.logging_config import configure_logging
from .core.schemas import RunConfig
from .core.validators import parse_coord, validate_connectivity, validate_format, validate_mode
from .services.gridmap import GridMap, load_map_file, serialize_map
from .services.mission_planner import MissionPlanner
from .services.rendering import emit_field_image, render_ascii
from .services.wavefront import ValueField


def _report(error: WaveSelectException) -> int:
    click.echo(error.one_line(), err=True)
    return error.exit_code


def _write_field(path: FilePath, field: ValueField) -> None:
    try:
        FilePath(path).write_bytes(emit_field_image(field))
    except OSError as e:
        raise ValidationError(f"cannot write field image {str(path)!r}: {e}", field="emit_field")
    logger.info(f"Wrote {field.width}x{field.height} value field to {path}")


def _emit_no_path(config: RunConfig, planner: MissionPlanner, grid: GridMap, error: NoPathError) -> int:
    if config.emit_field is not None and error.field is not None:
        _write_field(config.emit_field, error.field)
    if config.output_format == "json":
        click.echo(planner.failure_document(grid, error).to_json(), nl=False)
    else:
        click.echo(serialize_map(grid), nl=False)
    return _report(error)


def run(config: RunConfig) -> int:
    """Parse the map, plan, select robots and write the document to stdout.

    Returns the process exit status.
    """
    try:
        grid = load_map_file(config.map_path)
        planner = MissionPlanner(config.connectivity, config.mode)
        try:
            result = planner.plan(grid, config.start, config.goal)
        except NoPathError as e:
            return _emit_no_path(config, planner, grid, e)

        if config.emit_field is not None:
            _write_field(config.emit_field, result.field)

        if config.output_format == "json":
            click.echo(planner.document(grid, result).to_json(), nl=False)
        else:
            click.echo(render_ascii(grid, result.path), nl=False)
        return EXIT_OK
    except WaveSelectException as e:
        return _report(e)
    except Exception as e:
        logger.opt(exception=e).debug("Unexpected failure")
        first_line = next(iter(str(e).splitlines()), type(e).__name__)
        click.echo(f"error: INTERNAL_ERROR: {first_line}", err=True)
        return EXIT_INTERNAL


def build_config(
    map_path: Optional[str],
    start: Optional[str],
    goal: Optional[str],
    connectivity: str,
    mode: str,
    output_format: str,
    emit_field: Optional[str],
) -> RunConfig:
    """Validate raw flag values into a RunConfig (raises ValidationError)."""
    if not map_path:
        raise ValidationError("--map is required", field="map")
    try:
        connectivity_value = int(connectivity)
    except ValueError:
        raise ValidationError(
            f"connectivity must be 4 or 8, got {connectivity!r}",
            field="connectivity",
            error_code="INVALID_CONNECTIVITY",
        )
    return RunConfig(
        map_path=FilePath(map_path),
        start=parse_coord(start, "start"),
        goal=parse_coord(goal, "goal"),
        connectivity=validate_connectivity(connectivity_value),
        mode=validate_mode(mode),
        output_format=validate_format(output_format),
        emit_field=FilePath(emit_field) if emit_field else None,
    )


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--map", "map_path", metavar="PATH", help="Map file to plan on.")
@click.option("--start", metavar="R,C", help="Start cell (default: the 'A' marker).")
@click.option("--goal", metavar="R,C", help="Goal cell (default: the 'B' marker).")
@click.option("--connectivity", default="4", show_default=True, help="4 or 8 neighbors.")
@click.option("--mode", default="single", show_default=True, help="single or segmented.")
@click.option("--format", "output_format", default="json", show_default=True, help="json or ascii.")
@click.option("--emit-field", metavar="PATH.ppm", help="Write the value field as a P6 image.")
@click.option("--log-level", default=None, help="Log level for stderr (default from settings).")
def main(
    map_path: Optional[str],
    start: Optional[str],
    goal: Optional[str],
    connectivity: str,
    mode: str,
    output_format: str,
    emit_field: Optional[str],
    log_level: Optional[str],
) -> None:
    """Plan a mission with the wavefront planner and pick the robot for it."""
    try:
        configure_logging(log_level or get_settings().LOG_LEVEL)
    except ValueError:
        sys.exit(_report(ValidationError(f"unknown log level {log_level!r}", field="log_level")))

    try:
        config = build_config(map_path, start, goal, connectivity, mode, output_format, emit_field)
    except WaveSelectException as e:
        sys.exit(_report(e))

    sys.exit(run(config))


if __name__ == "__main__":
    main()
