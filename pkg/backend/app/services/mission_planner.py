"""End-to-end mission pipeline: map -> wave -> path -> terrain profile -> robot(s).

Shared by the command line and the HTTP API.
"""

from typing import Optional, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict
from pydantic import ValidationError as PydanticValidationError

from ..core.exceptions import (
    GoalOnObstacleError,
    GoalOutOfBoundsError,
    NoPathError,
    StartOnObstacleError,
    StartOutOfBoundsError,
    ValidationError,
)
from ..core.schemas import STATUS_NO_PATH, STATUS_OK, PlanDocument
from ..core.validators import validate_connectivity, validate_mode
from .gridmap import Coord, GridMap
from .selection import Plan, PlanMode, build_plan, robot_for_terrain, select_robot, terrain_priority
from .wavefront import UNREACHED, Path, ValueField, expand, extract_path


class MissionResult(BaseModel):
    """Everything one planning run produced."""

    model_config = ConfigDict(frozen=True)

    start: Coord
    goal: Coord
    connectivity: int
    field: ValueField
    path: Path
    plan: Plan


def resolve_endpoints(
    grid: GridMap,
    start: Optional[Tuple[int, int]] = None,
    goal: Optional[Tuple[int, int]] = None,
) -> Tuple[Coord, Coord]:
    """Explicit coordinates win over the map's 'A'/'B' markers."""
    resolved_start = Coord(*start) if start is not None else grid.start
    resolved_goal = Coord(*goal) if goal is not None else grid.goal
    if resolved_start is None:
        raise ValidationError("no start: pass --start or put an 'A' in the map", field="start")
    if resolved_goal is None:
        raise ValidationError("no goal: pass --goal or put a 'B' in the map", field="goal")

    if not grid.in_bounds(resolved_start):
        raise StartOutOfBoundsError(resolved_start)
    if grid.is_obstacle(resolved_start):
        raise StartOnObstacleError(resolved_start)
    if not grid.in_bounds(resolved_goal):
        raise GoalOutOfBoundsError(resolved_goal)
    if grid.is_obstacle(resolved_goal):
        raise GoalOnObstacleError(resolved_goal)
    return resolved_start, resolved_goal


class MissionPlanner:
    """Plans a mission and assigns robots to it."""

    def __init__(self, connectivity: int = 4, mode: str = PlanMode.SINGLE.value):
        self.connectivity = validate_connectivity(connectivity)
        self.mode = PlanMode(validate_mode(mode.value if isinstance(mode, PlanMode) else mode))

    def plan(
        self,
        grid: GridMap,
        start: Optional[Tuple[int, int]] = None,
        goal: Optional[Tuple[int, int]] = None,
    ) -> MissionResult:
        """Run the pipeline; NoPathError carries the value field of the failed run."""
        start, goal = resolve_endpoints(grid, start, goal)
        logger.info(f"Planning {grid.width}x{grid.height} map from {start} to {goal} "
                    f"(connectivity={self.connectivity}, mode={self.mode.value})")

        field = expand(grid, goal, self.connectivity)
        if field.value(start) == UNREACHED:
            logger.info(f"No path from {start} to {goal}")
            raise NoPathError(start, goal, field=field)

        path = extract_path(field, grid, start, self.connectivity)
        plan = build_plan(grid, path, self.mode)
        logger.info(f"Planned {path.length}-edge path "
                    f"({plan.robot.value if plan.robot else f'{len(plan.segments)} segments'})")
        return MissionResult(
            start=start,
            goal=goal,
            connectivity=self.connectivity,
            field=field,
            path=path,
            plan=plan,
        )

    def document(self, grid: GridMap, result: MissionResult) -> PlanDocument:
        return PlanDocument.from_plan(grid, result.start, result.goal, result.connectivity, result.plan)

    def failure_document(self, grid: GridMap, error: NoPathError) -> PlanDocument:
        return PlanDocument.no_path(grid, Coord(*error.start), Coord(*error.goal), self.connectivity, self.mode)


def validate_plan_document(document: PlanDocument, grid: GridMap) -> None:
    """Check a (re-read) PlanDocument against its map.

    Raises ValidationError on the first violated plan invariant.
    """
    def fail(message: str) -> None:
        raise ValidationError(f"plan document invalid: {message}", field="document")

    if (document.map.width, document.map.height) != (grid.width, grid.height):
        fail("map dimensions differ")
    if document.status == STATUS_NO_PATH:
        if document.path or document.robot is not None or document.segments:
            fail("no_path document carries a plan")
        return
    if document.status != STATUS_OK:
        fail(f"unknown status {document.status!r}")

    try:
        path = Path(coords=tuple(Coord(*c) for c in document.path))
    except PydanticValidationError:
        fail("path is empty")
    if path.start != tuple(document.start) or path.goal != tuple(document.goal):
        fail("path does not run from start to goal")
    if not path.is_valid_on(grid, validate_connectivity(document.connectivity)):
        fail("path steps are not adjacent or cross an obstacle")
    if document.length != path.length:
        fail("length does not match the path")

    terrains = [grid.terrain(at) for at in path.coords]
    if terrains != list(document.terrain_sequence):
        fail("terrain sequence does not match the map")
    if document.terrain_set != sorted(set(terrains), key=terrain_priority):
        fail("terrain set does not match the sequence")

    if document.mode is PlanMode.SINGLE:
        if document.segments is not None:
            fail("single-mode document carries segments")
        if document.robot != select_robot(terrains):
            fail("robot is not the one selected for the terrain set")
        return

    if document.robot is not None:
        fail("segmented document carries a single robot")
    if not document.segments:
        fail("segmented document has no segments")
    segments = document.segments
    for i, segment in enumerate(segments):
        if not segment.cells:
            fail(f"segment {i} has no cells")

    rebuilt = list(segments[0].cells)
    for previous, segment in zip(segments, segments[1:]):
        if previous.terrain == segment.terrain:
            fail("consecutive segments share a terrain")
        if segment.cells[0] != previous.cells[-1]:
            fail("segments do not share their junction cell")
        rebuilt.extend(segment.cells[1:])
    if rebuilt != list(document.path):
        fail("segments do not reproduce the path")
    for i, segment in enumerate(segments):
        own_cells = segment.cells if i == 0 else segment.cells[1:]
        if any(grid.terrain(Coord(*c)) != segment.terrain for c in own_cells):
            fail(f"segment {i} crosses terrain other than {segment.terrain.value}")
        if segment.robot != robot_for_terrain(segment.terrain):
            fail(f"segment robot {segment.robot.value} does not match terrain {segment.terrain.value}")
