"""Pydantic models (schemas) for run configuration, plan documents and the HTTP API

The PlanDocument is the machine-readable output of both the CLI and the
API; its field order is fixed so identical inputs give identical bytes.
"""

from datetime import datetime
from pathlib import Path as FilePath
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

from ..services.gridmap import Coord, GridMap, TerrainClass
from ..services.selection import Plan, PlanMode, Robot, terrain_priority

SCHEMA_VERSION = 1

STATUS_OK = "ok"
STATUS_NO_PATH = "no_path"


# ============ RUN CONFIGURATION ============

class RunConfig(BaseModel):
    """One CLI invocation"""
    map_path: FilePath = Field(..., description="Map file to plan on")
    start: Optional[Tuple[int, int]] = Field(None, description="Start override, else the 'A' marker")
    goal: Optional[Tuple[int, int]] = Field(None, description="Goal override, else the 'B' marker")
    connectivity: Literal[4, 8] = Field(4, description="4 or 8 neighbors")
    mode: PlanMode = Field(PlanMode.SINGLE, description="single or segmented")
    output_format: Literal["json", "ascii"] = Field("json", description="Document format")
    emit_field: Optional[FilePath] = Field(None, description="PPM output path for the value field")


# ============ PLAN DOCUMENT ============

class MapDimensions(BaseModel):
    width: int = Field(..., gt=0)
    height: int = Field(..., gt=0)


class SegmentDocument(BaseModel):
    """One robot's stretch of the path"""
    cells: List[Tuple[int, int]]
    terrain: TerrainClass
    robot: Robot


class PlanDocument(BaseModel):
    """Serialized plan, or a failure record with status 'no_path'"""
    schema_version: int = Field(SCHEMA_VERSION, description="Document schema version")
    status: str = Field(STATUS_OK, description="ok or no_path")
    map: MapDimensions
    start: Tuple[int, int]
    goal: Tuple[int, int]
    connectivity: int
    mode: PlanMode
    path: List[Tuple[int, int]] = Field(default_factory=list)
    length: Optional[int] = Field(None, ge=0, description="Edge count of the path")
    terrain_sequence: List[TerrainClass] = Field(default_factory=list)
    terrain_set: List[TerrainClass] = Field(default_factory=list, description="Highest priority first")
    robot: Optional[Robot] = Field(None, description="Single-mode robot")
    segments: Optional[List[SegmentDocument]] = Field(None, description="Segmented-mode assignments")

    @classmethod
    def from_plan(
        cls,
        grid: GridMap,
        start: Coord,
        goal: Coord,
        connectivity: int,
        plan: Plan,
    ) -> "PlanDocument":
        segments = None
        if plan.segments is not None:
            segments = [
                SegmentDocument(
                    cells=[tuple(c) for c in segment.path.coords],
                    terrain=segment.terrain,
                    robot=segment.robot,
                )
                for segment in plan.segments
            ]
        return cls(
            map=MapDimensions(width=grid.width, height=grid.height),
            start=tuple(start),
            goal=tuple(goal),
            connectivity=connectivity,
            mode=plan.mode,
            path=[tuple(c) for c in plan.path.coords],
            length=plan.length,
            terrain_sequence=list(plan.profile.sequence),
            terrain_set=sorted(plan.profile.present, key=terrain_priority),
            robot=plan.robot,
            segments=segments,
        )

    @classmethod
    def no_path(
        cls,
        grid: GridMap,
        start: Coord,
        goal: Coord,
        connectivity: int,
        mode: PlanMode,
    ) -> "PlanDocument":
        return cls(
            status=STATUS_NO_PATH,
            map=MapDimensions(width=grid.width, height=grid.height),
            start=tuple(start),
            goal=tuple(goal),
            connectivity=connectivity,
            mode=mode,
        )

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


# ============ HTTP API ============

class PlanRequest(BaseModel):
    """Body of POST /api/plan"""
    map: str = Field(..., min_length=1, description="Map text")
    start: Optional[Tuple[int, int]] = Field(None, description="Start override (row, col)")
    goal: Optional[Tuple[int, int]] = Field(None, description="Goal override (row, col)")
    connectivity: Literal[4, 8] = Field(4, description="4 or 8 neighbors")
    mode: PlanMode = Field(PlanMode.SINGLE, description="single or segmented")


class HealthStatus(BaseModel):
    status: str = Field("healthy", description="Service state")
    timestamp: datetime = Field(..., description="Check time")
    version: str = Field("1.0.0", description="Service version")


class ErrorResponse(BaseModel):
    """Standard error body"""
    status: str = Field("error", description="Always 'error'")
    message: str = Field(..., description="Error message")
    error_code: Optional[str] = Field(None, description="Error code")
    timestamp: datetime = Field(default_factory=datetime.now, description="Error time")
    details: Dict[str, Any] = Field(default_factory=dict)


class APIInfo(BaseModel):
    title: str = Field("WaveSelect API", description="Title")
    version: str = Field("1.0.0", description="Version")
    description: str = Field(
        "Wavefront path planning with terrain-priority robot selection",
        description="Description",
    )
    docs_url: str = Field("/api/docs", description="Documentation URL")
    endpoints: Dict[str, str] = Field(default_factory=dict)
