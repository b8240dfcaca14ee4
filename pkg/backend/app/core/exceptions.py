"""Custom exceptions for WaveSelect

Every failure raised by the planner carries an error code, a CLI exit code
and an HTTP status so both front ends report it the same way.
"""

from typing import Optional, Dict, Any, Tuple
from datetime import datetime

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_BAD_ARGUMENTS = 2
EXIT_PARSE_ERROR = 3
EXIT_NO_PATH = 4


class WaveSelectException(Exception):
    """Base exception for WaveSelect"""
    def __init__(
        self,
        message: str,
        error_code: str = "INTERNAL_ERROR",
        exit_code: int = EXIT_INTERNAL,
        status_code: int = 500,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        self.status_code = status_code
        self.details = details or {}
        self.timestamp = datetime.now()
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert the exception to a response dictionary"""
        return {
            "status": "error",
            "message": self.message,
            "error_code": self.error_code,
            "timestamp": self.timestamp.isoformat(),
            "details": self.details,
        }

    def one_line(self) -> str:
        """Single greppable line for the error stream."""
        return f"error: {self.error_code}: {self.message}"


# ============ ARGUMENTS ============

class ValidationError(WaveSelectException):
    """Invalid argument or request field"""
    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        error_code: str = "BAD_ARGUMENTS",
    ):
        details = {}
        if field:
            details["field"] = field
        super().__init__(
            message=message,
            error_code=error_code,
            exit_code=EXIT_BAD_ARGUMENTS,
            status_code=422,
            details=details,
        )


class OutOfBoundsError(ValidationError):
    """Coordinate outside the map"""
    def __init__(self, coord: Tuple[int, int], width: int, height: int):
        super().__init__(
            message=f"coordinate {tuple(coord)} is outside the {width}x{height} map",
            error_code="OUT_OF_BOUNDS",
        )
        self.details.update({"coord": list(coord), "width": width, "height": height})


# ============ MAP PARSING ============

class MapParseError(WaveSelectException):
    """Map text does not follow the map format"""
    def __init__(
        self,
        message: str,
        error_code: str = "PARSE_ERROR",
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(
            message=message,
            error_code=error_code,
            exit_code=EXIT_PARSE_ERROR,
            status_code=422,
            details=details,
        )


class RaggedRowsError(MapParseError):
    """Rows of unequal length"""
    def __init__(self, row: int, expected: int, actual: int):
        super().__init__(
            message=f"row {row} has {actual} cells, expected {expected}",
            error_code="RAGGED_ROWS",
            details={"row": row, "expected": expected, "actual": actual},
        )


class UnknownCharError(MapParseError):
    """Character outside the map alphabet"""
    def __init__(self, row: int, col: int, char: str):
        super().__init__(
            message=f"unknown map character {char!r} at row {row}, col {col}",
            error_code="UNKNOWN_CHAR",
            details={"row": row, "col": col, "char": char},
        )


class DuplicateMarkerError(MapParseError):
    """Second start or goal marker"""
    def __init__(self, marker: str, row: int, col: int):
        super().__init__(
            message=f"duplicate marker {marker!r} at row {row}, col {col}",
            error_code="DUPLICATE_MARKER",
            details={"marker": marker, "row": row, "col": col},
        )


class EmptyMapError(MapParseError):
    """Map text without cells"""
    def __init__(self):
        super().__init__(message="map is empty", error_code="EMPTY_MAP")


class InvalidEncodingError(MapParseError):
    """Map file bytes are not UTF-8"""
    def __init__(self, position: int, reason: str):
        super().__init__(
            message=f"map is not valid UTF-8 at byte {position}: {reason}",
            error_code="INVALID_ENCODING",
            details={"position": position},
        )


# ============ PLANNING ============

class PlanningError(WaveSelectException):
    """Wavefront planning failure"""
    def __init__(
        self,
        message: str,
        error_code: str,
        coord: Optional[Tuple[int, int]] = None,
        exit_code: int = EXIT_BAD_ARGUMENTS,
        status_code: int = 422,
    ):
        details = {}
        if coord is not None:
            details["coord"] = list(coord)
        super().__init__(
            message=message,
            error_code=error_code,
            exit_code=exit_code,
            status_code=status_code,
            details=details,
        )


class GoalOutOfBoundsError(PlanningError):
    def __init__(self, coord: Tuple[int, int]):
        super().__init__(f"goal {tuple(coord)} is outside the map", "GOAL_OUT_OF_BOUNDS", coord)


class GoalOnObstacleError(PlanningError):
    def __init__(self, coord: Tuple[int, int]):
        super().__init__(f"goal {tuple(coord)} is an obstacle", "GOAL_ON_OBSTACLE", coord)


class StartOutOfBoundsError(PlanningError):
    def __init__(self, coord: Tuple[int, int]):
        super().__init__(f"start {tuple(coord)} is outside the map", "START_OUT_OF_BOUNDS", coord)


class StartOnObstacleError(PlanningError):
    def __init__(self, coord: Tuple[int, int]):
        super().__init__(f"start {tuple(coord)} is an obstacle", "START_ON_OBSTACLE", coord)


class StartUnreachableError(PlanningError):
    """The wave never reached the start cell"""
    def __init__(self, coord: Tuple[int, int]):
        super().__init__(
            f"start {tuple(coord)} was not reached by the wave",
            "START_UNREACHABLE",
            coord,
            exit_code=EXIT_NO_PATH,
        )


class NoPathError(PlanningError):
    """No route between start and goal

    ``field`` keeps the value field of the failed expansion when available.
    """
    def __init__(
        self,
        start: Tuple[int, int],
        goal: Tuple[int, int],
        field: Optional[Any] = None,
    ):
        super().__init__(
            f"no path from {tuple(start)} to {tuple(goal)}",
            "NO_PATH",
            exit_code=EXIT_NO_PATH,
        )
        self.details.update({"start": list(start), "goal": list(goal)})
        self.start = start
        self.goal = goal
        self.field = field


# ============ SELECTION ============

class SelectionError(WaveSelectException):
    """Robot selection failure"""
    def __init__(self, message: str, error_code: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code=error_code,
            exit_code=EXIT_INTERNAL,
            status_code=422,
            details=details,
        )


class EmptyTerrainSetError(SelectionError):
    def __init__(self):
        super().__init__("cannot select a robot for an empty terrain set", "EMPTY_TERRAIN_SET")


class PathCellIsObstacleError(SelectionError):
    def __init__(self, coord: Tuple[int, int]):
        super().__init__(
            f"path cell {tuple(coord)} is an obstacle",
            "PATH_CELL_IS_OBSTACLE",
            details={"coord": list(coord)},
        )
