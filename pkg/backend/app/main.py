"""FastAPI application for WaveSelect

Plans a mission on a posted map with the wavefront planner and picks the
robot (or robot sequence) for it. Same pipeline as the command line.
"""

from datetime import datetime
from typing import List

from fastapi import FastAPI
from fastapi.responses import PlainTextResponse, Response
from loguru import logger

from .core.config import get_settings
from .core.exceptions import NoPathError
from .core.logging_config import configure_logging
from .core.middleware import configure_middleware
from .core.schemas import APIInfo, ErrorResponse, HealthStatus, PlanDocument, PlanRequest
from .core.validators import validate_map_size
from .services.gridmap import GridMap, parse_map, serialize_map
from .services.mission_planner import MissionPlanner
from .services.rendering import emit_field_image, render_ascii
from .services.selection import RobotProfile, robot_catalog

settings = get_settings()
configure_logging(settings.LOG_LEVEL)

app = FastAPI(
    title="WaveSelect API",
    description="Wavefront path planning with terrain-priority robot selection",
    version=settings.APP_VERSION,
    docs_url="/api/docs",
    openapi_url="/api/openapi.json",
)

configure_middleware(app, enable_cors=True)

ERROR_RESPONSES = {422: {"model": ErrorResponse, "description": "Invalid map or request"}}


def _parse_request_map(request: PlanRequest) -> GridMap:
    validate_map_size(request.map, settings.MAX_MAP_CELLS)
    return parse_map(request.map)


# ============ HEALTH ============

@app.get("/", tags=["Health"], response_model=APIInfo)
async def root() -> APIInfo:
    """API information"""
    return APIInfo(
        version=settings.APP_VERSION,
        endpoints={
            "health": "/health",
            "robots": "/api/robots",
            "plan": "/api/plan",
            "ascii": "/api/plan/ascii",
            "field": "/api/field.ppm",
        },
    )


@app.get("/health", tags=["Health"], response_model=HealthStatus)
async def health() -> HealthStatus:
    return HealthStatus(timestamp=datetime.now(), version=settings.APP_VERSION)


# ============ PLANNING ============

@app.get("/api/robots", tags=["Robots"], response_model=List[RobotProfile])
async def get_robots() -> List[RobotProfile]:
    """Robot roster, highest priority first"""
    return robot_catalog()


@app.post("/api/plan", tags=["Planning"], response_model=PlanDocument, responses=ERROR_RESPONSES)
def create_plan(request: PlanRequest) -> PlanDocument:
    """Plan the mission and assign robots.

    An unreachable goal is not an HTTP error: the document comes back with
    status ``no_path``.
    """
    grid = _parse_request_map(request)
    planner = MissionPlanner(request.connectivity, request.mode)
    try:
        result = planner.plan(grid, request.start, request.goal)
    except NoPathError as e:
        return planner.failure_document(grid, e)
    return planner.document(grid, result)


@app.post("/api/plan/ascii", tags=["Planning"], response_class=PlainTextResponse, responses=ERROR_RESPONSES)
def create_plan_ascii(request: PlanRequest) -> PlainTextResponse:
    """ASCII overlay of the planned path ('+'), or the bare map when there is none"""
    grid = _parse_request_map(request)
    planner = MissionPlanner(request.connectivity, request.mode)
    try:
        result = planner.plan(grid, request.start, request.goal)
    except NoPathError:
        return PlainTextResponse(serialize_map(grid))
    return PlainTextResponse(render_ascii(grid, result.path))


@app.post("/api/field.ppm", tags=["Planning"], responses=ERROR_RESPONSES)
def create_field_image(request: PlanRequest) -> Response:
    """Value field of the wave from the goal as a binary PPM"""
    grid = _parse_request_map(request)
    planner = MissionPlanner(request.connectivity, request.mode)
    try:
        field = planner.plan(grid, request.start, request.goal).field
    except NoPathError as e:
        field = e.field
    logger.debug(f"Rendering {field.width}x{field.height} value field")
    return Response(content=emit_field_image(field), media_type="image/x-portable-pixmap")


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "backend.app.main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.reload,
        log_level="info",
    )
