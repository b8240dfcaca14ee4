"""Exception handling, request logging and CORS for the HTTP API."""

import time
from typing import List, Optional
from uuid import uuid4

from fastapi import FastAPI, Request
from fastapi.encoders import jsonable_encoder
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from loguru import logger
from starlette.middleware.cors import CORSMiddleware

from .config import get_settings
from .exceptions import WaveSelectException
from .schemas import ErrorResponse


async def waveselect_exception_handler(request: Request, exc: WaveSelectException) -> JSONResponse:
    """Turn a WaveSelectException into its JSON error body."""
    logger.warning(f"{request.method} {request.url.path} - {exc.error_code}: {exc.message}")
    body = ErrorResponse(**exc.to_dict())
    return JSONResponse(status_code=exc.status_code, content=body.model_dump(mode="json"))


async def request_validation_handler(request: Request, exc: RequestValidationError) -> JSONResponse:
    """Malformed request bodies get the same error shape as planner errors."""
    body = ErrorResponse(
        message="request body does not match the schema",
        error_code="INVALID_REQUEST",
        details={"errors": jsonable_encoder(exc.errors())},
    )
    return JSONResponse(status_code=422, content=body.model_dump(mode="json"))


class RequestLoggingMiddleware:
    """Logs method, path, status and duration of every HTTP request."""

    def __init__(self, app):
        self.app = app

    async def __call__(self, scope, receive, send):
        if scope["type"] != "http":
            await self.app(scope, receive, send)
            return

        request = Request(scope, receive)
        request_id = str(uuid4())
        start_time = time.time()

        async def send_with_logging(message):
            if message["type"] == "http.response.start":
                process_ms = round((time.time() - start_time) * 1000, 2)
                logger.info(
                    f"{request.method} {request.url.path} - {message['status']} "
                    f"({process_ms}ms, request_id={request_id})"
                )
            await send(message)

        await self.app(scope, receive, send_with_logging)


def get_cors_middleware(app: FastAPI, origins: Optional[List[str]] = None) -> FastAPI:
    """Allow the configured origins (``Settings.ALLOWED_ORIGINS`` by default)."""
    if origins is None:
        origins = get_settings().ALLOWED_ORIGINS

    app.add_middleware(
        CORSMiddleware,
        allow_origins=origins,
        allow_credentials=False,
        allow_methods=["GET", "POST"],
        allow_headers=["Content-Type"],
    )
    return app


def configure_middleware(app: FastAPI, enable_cors: bool = True, cors_origins: Optional[List[str]] = None) -> FastAPI:
    """Register the exception handler and all middleware."""
    app.add_exception_handler(WaveSelectException, waveselect_exception_handler)
    app.add_exception_handler(RequestValidationError, request_validation_handler)
    app.add_middleware(RequestLoggingMiddleware)

    if enable_cors:
        get_cors_middleware(app, cors_origins)

    return app
