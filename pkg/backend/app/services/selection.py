"""Terrain-priority robot selection over a planned path.

Terrain priority:  Wall > Stairs > Clutter > Slope > Flat
Robot priority:    RoboticLizard > Biped > RoboticSnake > Quadruped > HalfHumanoid

Each terrain is handled by the robot of the same rank, so the robot for a
path is the robot of the highest-priority terrain it crosses.
"""

from enum import Enum
from itertools import groupby
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.exceptions import (
    EmptyTerrainSetError,
    OutOfBoundsError,
    PathCellIsObstacleError,
    ValidationError,
)
from ..core.validators import validate_mode
from .gridmap import GridMap, TerrainClass
from .wavefront import Path


class Robot(str, Enum):
    ROBOTIC_LIZARD = "RoboticLizard"
    BIPED = "Biped"
    ROBOTIC_SNAKE = "RoboticSnake"
    QUADRUPED = "Quadruped"
    HALF_HUMANOID = "HalfHumanoid"


class PlanMode(str, Enum):
    SINGLE = "single"
    SEGMENTED = "segmented"


_TERRAIN_PRIORITY: Dict[TerrainClass, int] = {
    TerrainClass.WALL: 1,
    TerrainClass.STAIRS: 2,
    TerrainClass.CLUTTER: 3,
    TerrainClass.SLOPE: 4,
    TerrainClass.FLAT: 5,
}

_ROBOT_PRIORITY: Dict[Robot, int] = {
    Robot.ROBOTIC_LIZARD: 1,
    Robot.BIPED: 2,
    Robot.ROBOTIC_SNAKE: 3,
    Robot.QUADRUPED: 4,
    Robot.HALF_HUMANOID: 5,
}

_TERRAIN_ROBOT: Dict[TerrainClass, Robot] = {
    TerrainClass.WALL: Robot.ROBOTIC_LIZARD,
    TerrainClass.STAIRS: Robot.BIPED,
    TerrainClass.CLUTTER: Robot.ROBOTIC_SNAKE,
    TerrainClass.SLOPE: Robot.QUADRUPED,
    TerrainClass.FLAT: Robot.HALF_HUMANOID,
}

_CAPABILITIES: Dict[Robot, str] = {
    Robot.ROBOTIC_LIZARD: "climbs walls; also crosses every lower-priority terrain",
    Robot.BIPED: "walks up and down stairs",
    Robot.ROBOTIC_SNAKE: "crawls through cluttered floor",
    Robot.QUADRUPED: "keeps its footing on slopes",
    Robot.HALF_HUMANOID: "moves only on flat floor",
}


# ============ MODELS ============

class TerrainProfile(BaseModel):
    """Terrain of every path cell, in path order."""

    model_config = ConfigDict(frozen=True)

    sequence: Tuple[TerrainClass, ...]
    present: FrozenSet[TerrainClass]

    @model_validator(mode="after")
    def _check_present(self) -> "TerrainProfile":
        if set(self.sequence) != set(self.present):
            raise ValidationError("present must be the set of terrains in sequence", field="present")
        return self

    def ordered_present(self) -> List[TerrainClass]:
        """Present terrains, highest priority first."""
        return sorted(self.present, key=terrain_priority)


class Segment(BaseModel):
    """A maximal same-terrain stretch of the path and the robot that drives it."""

    model_config = ConfigDict(frozen=True)

    path: Path
    terrain: TerrainClass
    robot: Robot


class RobotProfile(BaseModel):
    """Roster entry: a robot, its rank and the terrain it is assigned to."""

    robot: Robot
    rank: int = Field(..., ge=1, le=5)
    terrain: TerrainClass
    capability: str


class Plan(BaseModel):
    """Path, its terrain profile and the robot assignment."""

    model_config = ConfigDict(frozen=True)

    path: Path
    profile: TerrainProfile
    mode: PlanMode = PlanMode.SINGLE
    robot: Optional[Robot] = None
    segments: Optional[Tuple[Segment, ...]] = None

    @model_validator(mode="after")
    def _check_mode(self) -> "Plan":
        if self.mode is PlanMode.SINGLE and self.robot is None:
            raise ValidationError("single-mode plan needs a robot", field="robot")
        if self.mode is PlanMode.SEGMENTED and not self.segments:
            raise ValidationError("segmented plan needs segments", field="segments")
        return self

    @property
    def length(self) -> int:
        return self.path.length


# ============ PRIORITY TABLES ============

def terrain_priority(terrain: TerrainClass) -> int:
    """Rank 1 (Wall, highest) .. 5 (Flat)."""
    return _TERRAIN_PRIORITY[TerrainClass(terrain)]


def robot_priority(robot: Robot) -> int:
    """Rank 1 (RoboticLizard, highest) .. 5 (HalfHumanoid)."""
    return _ROBOT_PRIORITY[Robot(robot)]


def robot_for_terrain(terrain: TerrainClass) -> Robot:
    return _TERRAIN_ROBOT[TerrainClass(terrain)]


def robot_catalog() -> List[RobotProfile]:
    """All robots, highest priority first."""
    terrain_of = {robot: terrain for terrain, robot in _TERRAIN_ROBOT.items()}
    return [
        RobotProfile(
            robot=robot,
            rank=robot_priority(robot),
            terrain=terrain_of[robot],
            capability=_CAPABILITIES[robot],
        )
        for robot in sorted(Robot, key=robot_priority)
    ]


# ============ SELECTION ============

def terrain_profile(grid: GridMap, path: Path) -> TerrainProfile:
    sequence: List[TerrainClass] = []
    for at in path.coords:
        if not grid.in_bounds(at):
            raise OutOfBoundsError(at, grid.width, grid.height)
        terrain = grid.terrain(at)
        if terrain is None:
            raise PathCellIsObstacleError(at)
        sequence.append(terrain)
    return TerrainProfile(sequence=tuple(sequence), present=frozenset(sequence))


def select_robot(present: Iterable[TerrainClass]) -> Robot:
    """Robot of the highest-priority terrain present.

    A Wall anywhere on the path always means the RoboticLizard.
    """
    terrains = {TerrainClass(t) for t in present}
    if not terrains:
        raise EmptyTerrainSetError()
    governing = min(terrains, key=terrain_priority)
    return robot_for_terrain(governing)


def segment_plan(grid: GridMap, path: Path) -> List[Segment]:
    """Split the path into maximal runs of equal terrain.

    The last cell of a run is repeated as the first cell of the next
    segment, where the handoff between robots happens.
    """
    profile = terrain_profile(grid, path)
    segments: List[Segment] = []
    index = 0
    for terrain, run in groupby(profile.sequence):
        run_length = len(list(run))
        first = index - 1 if segments else index
        coords = path.coords[first:index + run_length]
        segments.append(
            Segment(path=Path(coords=coords), terrain=terrain, robot=robot_for_terrain(terrain))
        )
        index += run_length
    return segments


def build_plan(grid: GridMap, path: Path, mode: str = PlanMode.SINGLE.value) -> Plan:
    """Profile the path and assign one robot (single) or one robot per segment."""
    mode = PlanMode(validate_mode(mode.value if isinstance(mode, PlanMode) else mode))
    profile = terrain_profile(grid, path)

    if mode is PlanMode.SEGMENTED:
        segments = tuple(segment_plan(grid, path))
        logger.debug(f"Segmented {path.length}-edge path into {len(segments)} segments")
        return Plan(path=path, profile=profile, mode=mode, segments=segments)

    robot = select_robot(profile.present)
    logger.debug(f"Selected {robot.value} for terrains {[t.value for t in profile.ordered_present()]}")
    return Plan(path=path, profile=profile, mode=mode, robot=robot)
