"""HTTP API exposing a decision model.

Five endpoints under /api/v1: model, recommend, whatif, matrix, health.
Responses are rendered with the same canonical serializers the CLI uses, so
a recommendation fetched over HTTP is byte-identical to one computed in
process. Static payloads (model, matrix, health) are rendered once at app
construction; request handlers share no mutable state.
"""

from __future__ import annotations

import json
import logging
import time

from fastapi import FastAPI, Request, Response
from starlette.exceptions import HTTPException as StarletteHTTPException

from .engine import (
    matrix_json,
    parse_requirements,
    recommend,
    report_json,
    tradeoff_matrix,
    what_if,
    whatif_json,
)
from .errors import AmbiguousExclusiveError, DecideError, RequirementsError
from .jsonio import canonical_dumps
from .kb import model_document
from .model import CONTEXT_FACT_DOMAINS, DecisionModel

MEDIA_TYPE = "application/json; charset=utf-8"

logger = logging.getLogger(__name__)


def _json_response(text: str, status: int = 200) -> Response:
    return Response(content=text, status_code=status, media_type=MEDIA_TYPE)


def _error_response(exc: DecideError, status: int) -> Response:
    document: dict = {"code": exc.code, "message": exc.message}
    if exc.details:
        document["details"] = exc.details
    return _json_response(canonical_dumps(document), status)


def _parse_body(raw: bytes):
    try:
        return json.loads(raw)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise RequirementsError(f"request body is not valid JSON: {exc}") from exc


_HTTP_CODES = {404: "E_NOT_FOUND", 405: "E_METHOD_NOT_ALLOWED", 500: "E_INTERNAL"}


def _plain_error(status: int, message: str) -> Response:
    code = _HTTP_CODES.get(status, f"E_HTTP_{status}")
    return _json_response(canonical_dumps({"code": code, "message": message}), status)


def create_app(
    model: DecisionModel | None = None,
    allow_origins: tuple[str, ...] = (),
    log_requests: bool = False,
) -> FastAPI:
    if model is None:
        from .defaults import default_model

        model = default_model()

    app = FastAPI(
        title=model.metadata.title,
        version=model.metadata.version,
        docs_url=None,
        redoc_url=None,
        openapi_url=None,
    )

    # Non-2xx bodies carry exactly one {code, message} object, including
    # routing errors the framework would otherwise render as {"detail": ...}.
    @app.exception_handler(StarletteHTTPException)
    async def _http_exception(request: Request, exc: StarletteHTTPException) -> Response:
        return _plain_error(exc.status_code, str(exc.detail))

    @app.exception_handler(Exception)
    async def _unhandled_exception(request: Request, exc: Exception) -> Response:
        logger.exception("unhandled error on %s %s", request.method, request.url.path)
        return _plain_error(500, "internal error")

    if allow_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(allow_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )
    if log_requests:

        @app.middleware("http")
        async def _log_request(request: Request, call_next):
            started = time.perf_counter()
            response = await call_next(request)
            elapsed_ms = (time.perf_counter() - started) * 1000.0
            logger.info(
                "%s %s %d %.1fms", request.method, request.url.path, response.status_code, elapsed_ms
            )
            return response

    payload = model_document(model)
    payload["context_facts"] = {fact: list(values) for fact, values in CONTEXT_FACT_DOMAINS.items()}
    model_body = canonical_dumps(payload)
    matrix_body = matrix_json(tradeoff_matrix(model))
    health_body = canonical_dumps({"status": "ok"})

    @app.get("/api/v1/model")
    async def get_model() -> Response:
        return _json_response(model_body)

    @app.get("/api/v1/matrix")
    async def get_matrix() -> Response:
        return _json_response(matrix_body)

    @app.get("/api/v1/health")
    async def get_health() -> Response:
        return _json_response(health_body)

    @app.post("/api/v1/recommend")
    async def post_recommend(request: Request) -> Response:
        try:
            document = _parse_body(await request.body())
            requirements = parse_requirements(document, model)
            report = recommend(model, requirements)
        except RequirementsError as exc:
            return _error_response(exc, 400)
        except AmbiguousExclusiveError as exc:
            return _error_response(exc, 422)
        return _json_response(report_json(report))

    @app.post("/api/v1/whatif")
    async def post_whatif(request: Request) -> Response:
        try:
            document = _parse_body(await request.body())
            if not isinstance(document, dict):
                raise RequirementsError("what-if body must be an object with keys 'base' and 'variant'")
            unknown = sorted(set(document) - {"base", "variant"})
            if unknown:
                raise RequirementsError(f"unknown what-if key {unknown[0]!r}")
            missing = [key for key in ("base", "variant") if key not in document]
            if missing:
                raise RequirementsError(f"what-if body is missing key {missing[0]!r}")
            base = parse_requirements(document["base"], model)
            variant = parse_requirements(document["variant"], model)
            diff = what_if(model, base, variant)
        except RequirementsError as exc:
            return _error_response(exc, 400)
        except AmbiguousExclusiveError as exc:
            return _error_response(exc, 422)
        return _json_response(whatif_json(diff))

    return app
