"""Random map generators shared by the test suites."""

import random
from typing import List, Optional, Tuple

from hypothesis import strategies as st

from backend.app.services.gridmap import Cell, Coord, GridMap, TerrainClass

TERRAINS = list(TerrainClass)
ALL_CELLS = [Cell.obstacle()] + [Cell.traversable(t) for t in TERRAINS]


def random_grid(
    rng: random.Random,
    width: int,
    height: int,
    density: float,
    terrains: Optional[List[TerrainClass]] = None,
) -> GridMap:
    """Obstacles with probability ``density``, otherwise a random terrain."""
    choices = [Cell.traversable(t) for t in (terrains or TERRAINS)]
    cells = tuple(
        Cell.obstacle() if rng.random() < density else rng.choice(choices)
        for _ in range(width * height)
    )
    return GridMap(width=width, height=height, cells=cells)


def free_cells(grid: GridMap) -> List[Coord]:
    return [at for at in grid.coords() if not grid.is_obstacle(at)]


def random_instance(
    rng: random.Random,
    max_side: int = 64,
    max_density: float = 0.4,
) -> Optional[Tuple[GridMap, Coord, Coord]]:
    """A random map with two random traversable endpoints, or None if it has none."""
    grid = random_grid(
        rng,
        rng.randint(1, max_side),
        rng.randint(1, max_side),
        rng.uniform(0.0, max_density),
    )
    free = free_cells(grid)
    if not free:
        return None
    return grid, rng.choice(free), rng.choice(free)


@st.composite
def grid_maps(draw, max_side: int = 8, with_markers: bool = False) -> GridMap:
    width = draw(st.integers(min_value=1, max_value=max_side))
    height = draw(st.integers(min_value=1, max_value=max_side))
    cells = draw(st.lists(st.sampled_from(ALL_CELLS), min_size=width * height, max_size=width * height))
    grid = GridMap(width=width, height=height, cells=tuple(cells))
    if not with_markers:
        return grid

    flat = [at for at in grid.coords() if grid.terrain(at) is TerrainClass.FLAT]
    start = draw(st.one_of(st.none(), st.sampled_from(flat))) if flat else None
    remaining = [at for at in flat if at != start]
    goal = draw(st.one_of(st.none(), st.sampled_from(remaining))) if remaining else None
    return GridMap(width=width, height=height, cells=tuple(cells), start=start, goal=goal)


@st.composite
def grid_with_cell(draw, max_side: int = 8) -> Tuple[GridMap, Coord]:
    grid = draw(grid_maps(max_side=max_side))
    row = draw(st.integers(min_value=0, max_value=grid.height - 1))
    col = draw(st.integers(min_value=0, max_value=grid.width - 1))
    return grid, Coord(row, col)
