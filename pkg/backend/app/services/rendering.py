"""ASCII overlays and value-field images."""

from typing import List

import numpy as np

from ..core.exceptions import OutOfBoundsError, PathCellIsObstacleError
from .gridmap import GOAL_GLYPH, START_GLYPH, GridMap, serialize_map
from .wavefront import GOAL_VALUE, OBSTACLE_VALUE, UNREACHED, Path, ValueField

PATH_GLYPH = "+"

BLACK = 0
WHITE = 255
# reached cells stay clear of pure black and white
RAMP_DARK = 40
RAMP_LIGHT = 220


def render_ascii(grid: GridMap, path: Path) -> str:
    """Map text with the path's interior cells drawn as '+'.

    The path's first cell is drawn 'A' and its last 'B', so overridden
    endpoints show up where the robot actually starts and stops. Map
    markers the path does not end on fall back to their Flat glyph.
    A zero-length path is a single 'B'.
    """
    rows: List[List[str]] = [list(line) for line in serialize_map(grid).splitlines()]
    for at in path.coords:
        if not grid.in_bounds(at):
            raise OutOfBoundsError(at, grid.width, grid.height)
        if grid.is_obstacle(at):
            raise PathCellIsObstacleError(at)

    for marker in (grid.start, grid.goal):
        if marker is not None:
            rows[marker.row][marker.col] = grid.cell(marker).glyph
    for at in path.coords[1:-1]:
        rows[at.row][at.col] = PATH_GLYPH
    rows[path.start.row][path.start.col] = START_GLYPH
    rows[path.goal.row][path.goal.col] = GOAL_GLYPH
    return "\n".join("".join(row) for row in rows) + "\n"


def field_gray_levels(field: ValueField) -> np.ndarray:
    """Gray level per cell: obstacles black, unreached white, wave dark-to-light.

    The wave is scaled linearly onto the 181 levels 40..220, so on fields
    more than 180 steps deep neighboring wave values can share a gray.
    """
    values = field.as_array()
    gray = np.full(values.shape, WHITE, dtype=np.uint8)
    gray[values == OBSTACLE_VALUE] = BLACK

    reached = values >= GOAL_VALUE
    if reached.any():
        top = values[reached].max()
        span = max(int(top) - GOAL_VALUE, 1)
        ramp = RAMP_DARK + (values[reached] - GOAL_VALUE) * (RAMP_LIGHT - RAMP_DARK) / span
        gray[reached] = np.rint(ramp).astype(np.uint8)
    return gray


def emit_field_image(field: ValueField) -> bytes:
    """Binary PPM (P6, 8-bit), one pixel per cell."""
    gray = field_gray_levels(field)
    rgb = np.repeat(gray[:, :, np.newaxis], 3, axis=2)
    header = f"P6\n{field.width} {field.height}\n255\n".encode("ascii")
    return header + rgb.tobytes()


def render_field_text(field: ValueField) -> str:
    """Right-aligned wave values, '#' for obstacles and '.' for unreached cells."""
    values = field.as_array()
    width = max(len(str(field.max_value)), 1)
    lines = []
    for row in values:
        cells = []
        for v in row:
            if v == OBSTACLE_VALUE:
                cells.append("#".rjust(width))
            elif v == UNREACHED:
                cells.append(".".rjust(width))
            else:
                cells.append(str(int(v)).rjust(width))
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"
