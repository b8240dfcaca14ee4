"""Wavefront expansion from the goal and descent path extraction.

Value convention: 0 unreached, 1 obstacle, 2 goal, v >= 3 reached after
v - 2 steps. Neighbor order (and therefore tie-breaking) is the fixed
N, E, S, W[, NE, SE, SW, NW] order of ``gridmap.neighbors``.
"""

from collections import deque
from typing import Dict, List, Optional, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.exceptions import (
    GoalOnObstacleError,
    GoalOutOfBoundsError,
    NoPathError,
    OutOfBoundsError,
    StartOnObstacleError,
    StartOutOfBoundsError,
    StartUnreachableError,
    ValidationError,
)
from ..core.validators import validate_connectivity
from .gridmap import Coord, GridMap, neighbors

UNREACHED = 0
OBSTACLE_VALUE = 1
GOAL_VALUE = 2


class ValueField(BaseModel):
    """Per-cell wave values, row-major, same shape as the source map."""

    model_config = ConfigDict(frozen=True)

    width: int = Field(..., gt=0)
    height: int = Field(..., gt=0)
    values: Tuple[int, ...]
    goal: Optional[Coord] = None

    @model_validator(mode="after")
    def _check_shape(self) -> "ValueField":
        if len(self.values) != self.width * self.height:
            raise ValidationError(
                f"expected {self.width * self.height} values, got {len(self.values)}",
                field="values",
            )
        if any(v < 0 for v in self.values):
            raise ValidationError("wave values must be non-negative", field="values")
        return self

    def value(self, at: Tuple[int, int]) -> int:
        row, col = at
        if not (0 <= row < self.height and 0 <= col < self.width):
            raise OutOfBoundsError(at, self.width, self.height)
        return self.values[row * self.width + col]

    @property
    def max_value(self) -> int:
        return max(self.values)

    @property
    def reached_count(self) -> int:
        return sum(1 for v in self.values if v >= GOAL_VALUE)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64).reshape(self.height, self.width)


class Path(BaseModel):
    """Ordered cells from start (first) to goal (last)."""

    model_config = ConfigDict(frozen=True)

    coords: Tuple[Coord, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _check_no_repeats(self) -> "Path":
        if len(set(self.coords)) != len(self.coords):
            raise ValidationError("path revisits a cell", field="coords")
        return self

    @property
    def start(self) -> Coord:
        return self.coords[0]

    @property
    def goal(self) -> Coord:
        return self.coords[-1]

    @property
    def length(self) -> int:
        """Edge count."""
        return len(self.coords) - 1

    def __len__(self) -> int:
        return len(self.coords)

    def is_valid_on(self, grid: GridMap, connectivity: int = 4) -> bool:
        """Every cell traversable and every step between neighbors."""
        for at in self.coords:
            if not grid.in_bounds(at) or grid.is_obstacle(at):
                return False
        return all(
            nxt in neighbors(grid, cur, connectivity)
            for cur, nxt in zip(self.coords, self.coords[1:])
        )


def _check_shape(field: ValueField, grid: GridMap) -> None:
    if (field.width, field.height) != (grid.width, grid.height):
        raise ValidationError(
            f"value field is {field.width}x{field.height}, map is {grid.width}x{grid.height}",
            field="field",
        )


def expand(grid: GridMap, goal: Tuple[int, int], connectivity: int = 4) -> ValueField:
    """Breadth-first wave from ``goal``: every reached cell gets distance + 2."""
    connectivity = validate_connectivity(connectivity)
    goal = Coord(*goal)
    if not grid.in_bounds(goal):
        raise GoalOutOfBoundsError(goal)
    if grid.is_obstacle(goal):
        raise GoalOnObstacleError(goal)

    width = grid.width
    values = [OBSTACLE_VALUE if cell.is_obstacle else UNREACHED for cell in grid.cells]
    values[goal.row * width + goal.col] = GOAL_VALUE

    queue = deque([goal])
    while queue:
        current = queue.popleft()
        next_value = values[current.row * width + current.col] + 1
        for n in neighbors(grid, current, connectivity):
            idx = n.row * width + n.col
            if values[idx] == UNREACHED:
                values[idx] = next_value
                queue.append(n)

    field = ValueField(width=width, height=grid.height, values=tuple(values), goal=goal)
    logger.debug(f"Wave from {goal} reached {field.reached_count} cells (max value {field.max_value})")
    return field


def extract_path(
    field: ValueField,
    grid: GridMap,
    start: Tuple[int, int],
    connectivity: int = 4,
) -> Path:
    """Greedy descent from ``start``: always step to the first neighbor one value lower."""
    connectivity = validate_connectivity(connectivity)
    _check_shape(field, grid)
    start = Coord(*start)
    if not grid.in_bounds(start):
        raise StartOutOfBoundsError(start)
    if grid.is_obstacle(start):
        raise StartOnObstacleError(start)
    if field.value(start) == UNREACHED:
        raise StartUnreachableError(start)

    coords: List[Coord] = [start]
    current, current_value = start, field.value(start)
    while current_value > GOAL_VALUE:
        for n in neighbors(grid, current, connectivity):
            if field.value(n) == current_value - 1:
                current, current_value = n, current_value - 1
                coords.append(n)
                break
        else:
            raise ValidationError(
                f"value field has no descending neighbor at {tuple(current)}",
                field="field",
            )
    return Path(coords=tuple(coords))


def plan_path(
    grid: GridMap,
    start: Tuple[int, int],
    goal: Tuple[int, int],
    connectivity: int = 4,
) -> Path:
    """Shortest path from start to goal (expand, then extract_path)."""
    start = Coord(*start)
    if not grid.in_bounds(start):
        raise StartOutOfBoundsError(start)
    if grid.is_obstacle(start):
        raise StartOnObstacleError(start)

    field = expand(grid, goal, connectivity)
    if field.value(start) == UNREACHED:
        raise NoPathError(start, Coord(*goal), field=field)
    return extract_path(field, grid, start, connectivity)


def bfs_distance_oracle(
    grid: GridMap,
    a: Tuple[int, int],
    b: Tuple[int, int],
    connectivity: int = 4,
) -> Optional[int]:
    """Shortest edge count from ``a`` to ``b`` by a plain forward BFS; None if unreachable.

    Shares nothing with ``expand`` so the two can check each other.
    """
    connectivity = validate_connectivity(connectivity)
    for at, out_of_bounds, on_obstacle in (
        (a, StartOutOfBoundsError, StartOnObstacleError),
        (b, GoalOutOfBoundsError, GoalOnObstacleError),
    ):
        if not grid.in_bounds(at):
            raise out_of_bounds(at)
        if grid.is_obstacle(at):
            raise on_obstacle(at)

    steps = [(-1, 0), (1, 0), (0, -1), (0, 1)]
    if connectivity == 8:
        steps += [(-1, -1), (-1, 1), (1, -1), (1, 1)]

    source, target = tuple(a), tuple(b)
    distance: Dict[Tuple[int, int], int] = {source: 0}
    frontier = deque([source])
    while frontier:
        r, c = frontier.popleft()
        if (r, c) == target:
            return distance[target]
        for dr, dc in steps:
            nxt = (r + dr, c + dc)
            if nxt in distance or not grid.in_bounds(nxt) or grid.is_obstacle(nxt):
                continue
            distance[nxt] = distance[(r, c)] + 1
            frontier.append(nxt)
    return None
