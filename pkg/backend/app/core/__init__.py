"""Core configuration, errors and validation"""

from .config import Settings, get_settings
from .exceptions import (
    EXIT_BAD_ARGUMENTS,
    EXIT_INTERNAL,
    EXIT_NO_PATH,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    WaveSelectException,
    ValidationError,
    OutOfBoundsError,
    MapParseError,
    RaggedRowsError,
    UnknownCharError,
    DuplicateMarkerError,
    EmptyMapError,
    PlanningError,
    GoalOutOfBoundsError,
    GoalOnObstacleError,
    StartOutOfBoundsError,
    StartOnObstacleError,
    StartUnreachableError,
    NoPathError,
    SelectionError,
    EmptyTerrainSetError,
    PathCellIsObstacleError,
)
from .validators import (
    parse_coord,
    validate_connectivity,
    validate_format,
    validate_map_size,
    validate_mode,
)

__all__ = [
    "Settings",
    "get_settings",
    "EXIT_BAD_ARGUMENTS",
    "EXIT_INTERNAL",
    "EXIT_NO_PATH",
    "EXIT_OK",
    "EXIT_PARSE_ERROR",
    "WaveSelectException",
    "ValidationError",
    "OutOfBoundsError",
    "MapParseError",
    "RaggedRowsError",
    "UnknownCharError",
    "DuplicateMarkerError",
    "EmptyMapError",
    "PlanningError",
    "GoalOutOfBoundsError",
    "GoalOnObstacleError",
    "StartOutOfBoundsError",
    "StartOnObstacleError",
    "StartUnreachableError",
    "NoPathError",
    "SelectionError",
    "EmptyTerrainSetError",
    "PathCellIsObstacleError",
    "parse_coord",
    "validate_connectivity",
    "validate_format",
    "validate_map_size",
    "validate_mode",
]
