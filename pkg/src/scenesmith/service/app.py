"""HTTP service exposing the scene pipeline.

All bodies are parsed by hand so malformed JSON comes back as a uniform
400 envelope instead of a framework stack trace; every error response has
the shape {"error": {"code", "message"}}.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from ..config import Settings
from ..errors import (
    AssetNotFound,
    IndexOutOfRange,
    JobNotFound,
    ProviderTimeout,
    ProviderUnavailable,
    SceneBusy,
    SceneNotFound,
    ScenesmithError,
    UnknownCharacter,
)
from ..kinematics.characters import list_characters
from .jobs import JobRegistry
from .pipeline import Runtime, apply_line_update, build_runtime, create_scene, start_generation
from .store import SceneStore

_NOT_FOUND = (SceneNotFound, JobNotFound, AssetNotFound, UnknownCharacter, IndexOutOfRange)


def _status_for(exc: ScenesmithError) -> int:
    if isinstance(exc, _NOT_FOUND):
        return 404
    if isinstance(exc, SceneBusy):
        return 409
    if isinstance(exc, ProviderTimeout):
        return 504
    if isinstance(exc, ProviderUnavailable):
        return 502
    return 400


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse({"error": {"code": code, "message": message}}, status_code=status)


async def _read_json(request: Request) -> dict:
    raw = await request.body()
    if not raw:
        return {}
    try:
        body = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ApiError(400, "bad_request", f"request body is not valid JSON: {e}") from None
    if not isinstance(body, dict):
        raise ApiError(400, "bad_request", "request body must be a JSON object")
    return body


def create_app(
    settings: Settings | None = None,
    runtime: Runtime | None = None,
    store: SceneStore | None = None,
    registry: JobRegistry | None = None,
) -> FastAPI:
    settings = settings or Settings.from_env()
    runtime = runtime or build_runtime(settings)
    store = store or SceneStore(settings.data_dir)
    registry = registry or JobRegistry()

    app = FastAPI(title="scenesmith", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.settings = settings
    app.state.runtime = runtime
    app.state.store = store
    app.state.registry = registry

    @app.exception_handler(ScenesmithError)
    async def on_domain_error(_req, exc: ScenesmithError):
        return _error_response(_status_for(exc), exc.code, str(exc))

    @app.exception_handler(ApiError)
    async def on_api_error(_req, exc: ApiError):
        return _error_response(exc.status, exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(_req, exc: RequestValidationError):
        return _error_response(400, "bad_request", str(exc.errors()[:1]))

    # -- scenes -----------------------------------------------------------

    @app.post("/api/scenes", status_code=201)
    async def post_scene(request: Request):
        body = await _read_json(request)
        script = body.get("script")
        if not isinstance(script, str) or not script.strip():
            raise ApiError(400, "bad_request", "body must include a non-empty 'script' string")
        cast = body.get("cast")
        if cast is not None and not isinstance(cast, dict):
            raise ApiError(400, "bad_request", "'cast' must be an object if given")
        scene_id = body.get("sceneId")
        if scene_id is not None:
            if not isinstance(scene_id, str) or not scene_id.strip():
                raise ApiError(400, "bad_request", "'sceneId' must be a non-empty string")
            if store.exists(scene_id):
                raise ApiError(409, "scene_exists", f"scene {scene_id!r} already exists")
        bundle, warnings = create_scene(store, script, runtime, cast, scene_id)
        return JSONResponse(
            {
                "sceneId": bundle.scene_id,
                "title": bundle.summary.title,
                "synopsis": bundle.summary.synopsis,
                "speakers": [s for s in bundle.cast],
                "warnings": warnings,
            },
            status_code=201,
        )

    @app.get("/api/scenes")
    async def get_scenes():
        return store.list_scenes()

    @app.get("/api/scenes/{scene_id}")
    async def get_scene(scene_id: str):
        bundle = store.load_bundle(scene_id)
        return {"sceneId": bundle.scene_id, **bundle.to_record()}

    @app.post("/api/scenes/{scene_id}/generate", status_code=202)
    async def post_generate(scene_id: str):
        job = start_generation(store, runtime, registry, scene_id)
        return JSONResponse({"jobId": job.job_id}, status_code=202)

    @app.get("/api/jobs/{job_id}")
    async def get_job(job_id: str):
        return registry.get(job_id).to_record()

    # -- line edits and assets --------------------------------------------

    @app.patch("/api/scenes/{scene_id}/lines/{index}", status_code=202)
    async def patch_line(scene_id: str, index: int, request: Request):
        body = await _read_json(request)
        style = body.get("style")
        speech = body.get("speech")
        if style is None and speech is None:
            raise ApiError(400, "bad_request", "provide 'style' and/or 'speech'")
        if style is not None and not isinstance(style, str):
            raise ApiError(400, "bad_request", "'style' must be a string")
        if speech is not None and not isinstance(speech, str):
            raise ApiError(400, "bad_request", "'speech' must be a string")
        job, bundle = apply_line_update(
            store, runtime, registry, scene_id, index, new_style=style, new_speech=speech
        )
        return JSONResponse(
            {"jobId": job.job_id, "line": bundle.lines[index].to_record()}, status_code=202
        )

    @app.get("/api/scenes/{scene_id}/lines/{index}/audio")
    async def get_audio(scene_id: str, index: int):
        path = store.asset_path(scene_id, "audio", index)
        return Response(path.read_bytes(), media_type="audio/wav")

    @app.get("/api/scenes/{scene_id}/lines/{index}/motion")
    async def get_motion(scene_id: str, index: int):
        path = store.asset_path(scene_id, "motion", index)
        return Response(path.read_bytes(), media_type="text/plain; charset=utf-8")

    @app.get("/api/scenes/{scene_id}/lines/{index}/camera")
    async def get_camera(scene_id: str, index: int):
        path = store.asset_path(scene_id, "camera", index)
        return Response(path.read_bytes(), media_type="application/json")

    # -- catalogues --------------------------------------------------------

    @app.get("/api/voices")
    async def get_voices():
        return {"voices": [v.to_record() for v in runtime.tts.list_voices()]}

    @app.get("/api/characters")
    async def get_characters():
        return {"characters": [c.to_record() for c in list_characters()]}

    return app
