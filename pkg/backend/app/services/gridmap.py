"""Grid map model, text map format and neighborhood queries.

Map text format, one character per cell, rows separated by a single line
feed, optional single trailing line feed:

    .  Flat        ~  Slope       *  Clutter
    H  Stairs      W  Wall        #  Obstacle
    A  start (Flat)               B  goal (Flat)
"""

from enum import Enum
from pathlib import Path as FilePath
from typing import Dict, Iterator, List, NamedTuple, Optional, TextIO, Tuple, Union

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.exceptions import (
    DuplicateMarkerError,
    EmptyMapError,
    InvalidEncodingError,
    OutOfBoundsError,
    RaggedRowsError,
    UnknownCharError,
    ValidationError,
)

SAMPLE_MAP_PATH = FilePath(__file__).resolve().parent.parent / "maps" / "all_terrain.map"

START_GLYPH = "A"
GOAL_GLYPH = "B"
OBSTACLE_GLYPH = "#"


class TerrainClass(str, Enum):
    """Surface category of a traversable cell."""

    WALL = "Wall"
    STAIRS = "Stairs"
    CLUTTER = "Clutter"
    SLOPE = "Slope"
    FLAT = "Flat"

    @property
    def glyph(self) -> str:
        return _TERRAIN_GLYPHS[self]


_TERRAIN_GLYPHS: Dict[TerrainClass, str] = {
    TerrainClass.FLAT: ".",
    TerrainClass.SLOPE: "~",
    TerrainClass.CLUTTER: "*",
    TerrainClass.STAIRS: "H",
    TerrainClass.WALL: "W",
}


class Coord(NamedTuple):
    """(row, col), 0-based, top-left origin."""

    row: int
    col: int


class Cell(BaseModel):
    """A map cell: an obstacle (``terrain is None``) or a traversable terrain."""

    model_config = ConfigDict(frozen=True)

    terrain: Optional[TerrainClass] = None

    @property
    def is_obstacle(self) -> bool:
        return self.terrain is None

    @property
    def glyph(self) -> str:
        if self.terrain is None:
            return OBSTACLE_GLYPH
        return self.terrain.glyph

    @classmethod
    def obstacle(cls) -> "Cell":
        return OBSTACLE

    @classmethod
    def traversable(cls, terrain: TerrainClass) -> "Cell":
        return _TRAVERSABLE[TerrainClass(terrain)]


OBSTACLE = Cell(terrain=None)
_TRAVERSABLE: Dict[TerrainClass, Cell] = {t: Cell(terrain=t) for t in TerrainClass}

_GLYPH_CELLS: Dict[str, Cell] = {glyph: _TRAVERSABLE[t] for t, glyph in _TERRAIN_GLYPHS.items()}
_GLYPH_CELLS[OBSTACLE_GLYPH] = OBSTACLE
_GLYPH_CELLS[START_GLYPH] = _TRAVERSABLE[TerrainClass.FLAT]
_GLYPH_CELLS[GOAL_GLYPH] = _TRAVERSABLE[TerrainClass.FLAT]

# N, E, S, W then NE, SE, SW, NW
_OFFSETS: Tuple[Tuple[int, int], ...] = (
    (-1, 0), (0, 1), (1, 0), (0, -1),
    (-1, 1), (1, 1), (1, -1), (-1, -1),
)


class GridMap(BaseModel):
    """Rectangular, row-major grid of cells with optional start/goal markers."""

    model_config = ConfigDict(frozen=True)

    width: int = Field(..., gt=0, description="Cells per row")
    height: int = Field(..., gt=0, description="Number of rows")
    cells: Tuple[Cell, ...] = Field(..., description="Row-major cells")
    start: Optional[Coord] = None
    goal: Optional[Coord] = None

    @model_validator(mode="after")
    def _check_shape_and_markers(self) -> "GridMap":
        if len(self.cells) != self.width * self.height:
            raise ValidationError(
                f"expected {self.width * self.height} cells, got {len(self.cells)}",
                field="cells",
            )
        for name, marker in (("start", self.start), ("goal", self.goal)):
            if marker is None:
                continue
            if not self.in_bounds(marker):
                raise OutOfBoundsError(marker, self.width, self.height)
            if self.terrain(marker) is not TerrainClass.FLAT:
                raise ValidationError(f"{name} marker {tuple(marker)} must be a Flat cell", field=name)
        return self

    def in_bounds(self, at: Tuple[int, int]) -> bool:
        row, col = at
        return 0 <= row < self.height and 0 <= col < self.width

    def cell(self, at: Tuple[int, int]) -> Cell:
        if not self.in_bounds(at):
            raise OutOfBoundsError(at, self.width, self.height)
        return self.cells[at[0] * self.width + at[1]]

    def terrain(self, at: Tuple[int, int]) -> Optional[TerrainClass]:
        return self.cell(at).terrain

    def is_obstacle(self, at: Tuple[int, int]) -> bool:
        return self.cell(at).is_obstacle

    def coords(self) -> Iterator[Coord]:
        for r in range(self.height):
            for c in range(self.width):
                yield Coord(r, c)


def _read_text(text: Union[str, TextIO]) -> str:
    if hasattr(text, "read"):
        return text.read()
    return text


def parse_map(text: Union[str, TextIO]) -> GridMap:
    """Parse map text into a GridMap.

    Raises RaggedRowsError, UnknownCharError, DuplicateMarkerError or
    EmptyMapError.
    """
    raw = _read_text(text)
    if raw.endswith("\n"):
        raw = raw[:-1]
    if not raw:
        raise EmptyMapError()

    lines = raw.split("\n")
    if not any(lines):
        raise EmptyMapError()
    width = len(lines[0])
    cells: List[Cell] = []
    start: Optional[Coord] = None
    goal: Optional[Coord] = None

    for r, line in enumerate(lines):
        if len(line) != width:
            raise RaggedRowsError(r, width, len(line))
        for c, char in enumerate(line):
            cell = _GLYPH_CELLS.get(char)
            if cell is None:
                raise UnknownCharError(r, c, char)
            if char == START_GLYPH:
                if start is not None:
                    raise DuplicateMarkerError(char, r, c)
                start = Coord(r, c)
            elif char == GOAL_GLYPH:
                if goal is not None:
                    raise DuplicateMarkerError(char, r, c)
                goal = Coord(r, c)
            cells.append(cell)

    grid = GridMap(width=width, height=len(lines), cells=tuple(cells), start=start, goal=goal)
    logger.debug(f"Parsed {grid.width}x{grid.height} map (start={start}, goal={goal})")
    return grid


def serialize_map(grid: GridMap) -> str:
    """Render a GridMap back to map text with a single trailing newline."""
    glyphs = [cell.glyph for cell in grid.cells]
    if grid.start is not None:
        glyphs[grid.start.row * grid.width + grid.start.col] = START_GLYPH
    if grid.goal is not None:
        glyphs[grid.goal.row * grid.width + grid.goal.col] = GOAL_GLYPH
    lines = [
        "".join(glyphs[r * grid.width:(r + 1) * grid.width])
        for r in range(grid.height)
    ]
    return "\n".join(lines) + "\n"


def neighbors(grid: GridMap, at: Tuple[int, int], connectivity: int = 4) -> List[Coord]:
    """Non-obstacle, in-bounds neighbors in N, E, S, W (then NE, SE, SW, NW) order."""
    if connectivity not in (4, 8):
        raise ValidationError(f"connectivity must be 4 or 8, got {connectivity}", field="connectivity")
    if not grid.in_bounds(at):
        raise OutOfBoundsError(at, grid.width, grid.height)

    row, col = at
    width, height, cells = grid.width, grid.height, grid.cells
    result: List[Coord] = []
    for dr, dc in _OFFSETS[:connectivity]:
        nr, nc = row + dr, col + dc
        if 0 <= nr < height and 0 <= nc < width and cells[nr * width + nc].terrain is not None:
            result.append(Coord(nr, nc))
    return result


def load_map_file(path: Union[str, FilePath]) -> GridMap:
    """Read and parse a map file."""
    try:
        data = FilePath(path).read_bytes()
    except OSError as e:
        raise ValidationError(f"cannot read map file {str(path)!r}: {e}", field="map")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise InvalidEncodingError(e.start, e.reason)
    return parse_map(text)


def load_sample_map() -> GridMap:
    """The bundled all-terrain map: every route from A to B crosses all five terrains."""
    return load_map_file(SAMPLE_MAP_PATH)
