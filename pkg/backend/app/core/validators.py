"""Validators for command-line flags and API request parameters."""

from typing import Optional, Tuple

from .exceptions import ValidationError

CONNECTIVITIES = (4, 8)
MODES = ("single", "segmented")
FORMATS = ("json", "ascii")


def validate_connectivity(value: int) -> int:
    """Connectivity must be 4 or 8."""
    if isinstance(value, bool) or value not in CONNECTIVITIES:
        raise ValidationError(
            message=f"connectivity must be 4 or 8, got {value!r}",
            field="connectivity",
            error_code="INVALID_CONNECTIVITY",
        )
    return int(value)


def validate_mode(value: str) -> str:
    """Selection mode: single or segmented."""
    if not isinstance(value, str) or value.strip().lower() not in MODES:
        raise ValidationError(
            message=f"mode must be one of {', '.join(MODES)}, got {value!r}",
            field="mode",
            error_code="INVALID_MODE",
        )
    return value.strip().lower()


def validate_format(value: str) -> str:
    """Output format: json or ascii."""
    if not isinstance(value, str) or value.strip().lower() not in FORMATS:
        raise ValidationError(
            message=f"format must be one of {', '.join(FORMATS)}, got {value!r}",
            field="format",
            error_code="INVALID_FORMAT",
        )
    return value.strip().lower()


def parse_coord(value: Optional[str], field: str) -> Optional[Tuple[int, int]]:
    """Parse an ``R,C`` flag into a (row, col) pair."""
    if value is None:
        return None

    parts = value.split(",")
    if len(parts) != 2:
        raise ValidationError(
            message=f"{field} must look like R,C, got {value!r}",
            field=field,
            error_code="INVALID_COORD",
        )
    try:
        row, col = (int(p.strip()) for p in parts)
    except ValueError:
        raise ValidationError(
            message=f"{field} must contain two integers, got {value!r}",
            field=field,
            error_code="INVALID_COORD",
        )

    if row < 0 or col < 0:
        raise ValidationError(
            message=f"{field} must be non-negative, got {value!r}",
            field=field,
            error_code="INVALID_COORD",
        )
    return row, col


def validate_map_size(text: str, max_cells: int) -> str:
    """Reject map text holding more than ``max_cells`` cells."""
    cells = len(text) - text.count("\n")
    if cells > max_cells:
        raise ValidationError(
            message=f"map has {cells} cells, limit is {max_cells}",
            field="map",
            error_code="MAP_TOO_LARGE",
        )
    return text
