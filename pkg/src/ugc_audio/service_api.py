"""REST/JSON boundary used by the web UI, the CLI, and external tools."""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .backends import BackendError, caption_image
from .color_mood import gradient_mood
from .config import Config
from .content_model import (ContentError, LevelSpec, VehicleSpec, dumps,
                            level_from_dict, loads, validate_level,
                            validate_vehicle)
from .orchestrator import Orchestrator, UnknownIdError
from .prompt_synthesis import (PromptError, PromptKind, PromptSource,
                               PromptSpec, caption_prompt, music_prompt,
                               sfx_prompt)
from .sim import simulate
from .terrain import generate_terrain


class ApiError(Exception):
    def __init__(self, http_status: int, machine_code: str, message: str):
        super().__init__(message)
        self.http_status = http_status
        self.machine_code = machine_code
        self.message = message


class ContentStore:
    """Flat-file store of level/vehicle JSON documents."""

    def __init__(self, root: Path):
        self.root = root
        root.mkdir(parents=True, exist_ok=True)

    def _path(self, kind: str, doc_id: str) -> Path:
        safe = "".join(c if c.isalnum() or c in "-_" else "_" for c in doc_id)
        return self.root / f"{kind}_{safe}.json"

    def put(self, kind: str, doc) -> None:
        self._path(kind, doc.id).write_text(dumps(doc), encoding="utf-8")

    def get(self, kind: str, doc_id: str):
        path = self._path(kind, doc_id)
        if not path.exists():
            raise ApiError(404, "not_found", f"{kind} {doc_id!r} not found")
        return loads(path.read_text(encoding="utf-8"))

    def ids(self, kind: str) -> list[str]:
        docs = []
        for p in sorted(self.root.glob(f"{kind}_*.json")):
            docs.append(loads(p.read_text(encoding="utf-8")).id)
        return docs


class GenerateBody(BaseModel):
    prompt_override: str | None = None
    seed: int | None = None
    melody_asset_id: str | None = None


class SimulateBody(BaseModel):
    terrain_seed: int


def create_app(config: Config, orchestrator: Orchestrator | None = None,
               static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="ugc-audio", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])

    orch = orchestrator or Orchestrator(
        config.data_dir, config.music_backend, config.sfx_backend,
        max_concurrent_jobs=config.max_concurrent_jobs)
    orch.set_melody_resolver(lambda asset_id: orch.get_asset(asset_id)[1])
    store = ContentStore(Path(config.data_dir) / "content")
    captions: dict[str, str] = {}  # content id -> latest uploaded caption

    app.state.orchestrator = orch
    app.state.content_store = store

    @app.exception_handler(ApiError)
    async def api_error_handler(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.http_status,
            content={"error": {"http_status": exc.http_status,
                               "machine_code": exc.machine_code,
                               "message": exc.message}})

    def parse_doc(data: dict, want_kind: str):
        try:
            doc = loads(json.dumps(data))
        except ContentError as exc:
            raise ApiError(400, "invalid_content", str(exc))
        if want_kind == "level":
            if not isinstance(doc, LevelSpec):
                raise ApiError(400, "invalid_content", "expected a level document")
            report = validate_level(doc)
        else:
            if not isinstance(doc, VehicleSpec):
                raise ApiError(400, "invalid_content", "expected a vehicle document")
            report = validate_vehicle(doc, config.catalog)
        if not report.ok:
            raise ApiError(400, "invalid_content", "; ".join(report.violations))
        return doc

    def build_prompt(kind: str, doc, source: str) -> PromptSpec:
        if source == "caption":
            caption = captions.get(doc.id)
            if caption is None:
                raise ApiError(400, "no_caption",
                               f"no caption uploaded for {doc.id!r}")
            return caption_prompt(
                caption, PromptKind.MUSIC if kind == "level" else PromptKind.SFX)
        if source != "programmatic":
            raise ApiError(400, "bad_request", f"unknown prompt source {source!r}")
        if kind == "level":
            mood = gradient_mood(doc.gradient, config.color_table)
            if config.music_template:
                return music_prompt(mood, template=config.music_template)
            return music_prompt(mood)
        try:
            return sfx_prompt(doc, config.catalog, config.light_max_kg,
                              config.medium_max_kg)
        except PromptError as exc:
            raise ApiError(422, "wheelless_vehicle", str(exc))

    # --- content CRUD ---

    @app.post("/api/levels", status_code=201)
    @app.put("/api/levels/{doc_id}")
    async def put_level(request: Request, doc_id: str | None = None):
        data = await request.json()
        doc = parse_doc(data, "level")
        if doc_id is not None and doc.id != doc_id:
            raise ApiError(400, "invalid_content", "document id does not match URL")
        store.put("level", doc)
        return {"id": doc.id}

    @app.get("/api/levels")
    async def list_levels():
        return {"ids": store.ids("level")}

    @app.get("/api/levels/{doc_id}")
    async def get_level(doc_id: str):
        return json.loads(dumps(store.get("level", doc_id)))

    @app.post("/api/vehicles", status_code=201)
    @app.put("/api/vehicles/{doc_id}")
    async def put_vehicle(request: Request, doc_id: str | None = None):
        data = await request.json()
        doc = parse_doc(data, "vehicle")
        if doc_id is not None and doc.id != doc_id:
            raise ApiError(400, "invalid_content", "document id does not match URL")
        store.put("vehicle", doc)
        return {"id": doc.id}

    @app.get("/api/vehicles")
    async def list_vehicles():
        return {"ids": store.ids("vehicle")}

    @app.get("/api/vehicles/{doc_id}")
    async def get_vehicle(doc_id: str):
        return json.loads(dumps(store.get("vehicle", doc_id)))

    # --- prompt preview (side-effect free) ---

    @app.post("/api/levels/{doc_id}/prompt")
    async def preview_level_prompt(doc_id: str, source: str = "programmatic"):
        doc = store.get("level", doc_id)
        return build_prompt("level", doc, source).to_dict()

    @app.post("/api/vehicles/{doc_id}/prompt")
    async def preview_vehicle_prompt(doc_id: str, source: str = "programmatic"):
        doc = store.get("vehicle", doc_id)
        return build_prompt("vehicle", doc, source).to_dict()

    # --- captions ---

    @app.post("/api/captions")
    async def upload_caption(request: Request, content_id: str):
        image = await request.body()
        try:
            caption = caption_image(image, config.captioner)
        except BackendError as exc:
            raise ApiError(502, "backend_unavailable", str(exc))
        captions[content_id] = caption
        return {"caption": caption}

    # --- generation jobs ---

    def submit_job(kind: str, doc, body: GenerateBody, source: str):
        prompt = build_prompt(kind, doc, source)
        if body.melody_asset_id is not None:
            if prompt.kind is not PromptKind.MUSIC:
                raise ApiError(400, "bad_request",
                               "melody reference only applies to music")
            prompt = PromptSpec(
                text=prompt.text, kind=prompt.kind, duration_s=prompt.duration_s,
                sample_rate_hz=prompt.sample_rate_hz, source=prompt.source,
                melody_ref=body.melody_asset_id)
        if body.prompt_override is not None:
            try:
                prompt = PromptSpec(
                    text=body.prompt_override.strip(), kind=prompt.kind,
                    duration_s=prompt.duration_s,
                    sample_rate_hz=prompt.sample_rate_hz,
                    source=prompt.source, melody_ref=prompt.melody_ref)
            except PromptError as exc:
                raise ApiError(400, "bad_request", str(exc))
        job = orch.submit(prompt, seed=body.seed)
        return {"job_id": job.id}

    @app.post("/api/levels/{doc_id}/music", status_code=202)
    async def generate_music(doc_id: str, body: GenerateBody = GenerateBody(),
                             source: str = "programmatic"):
        return submit_job("level", store.get("level", doc_id), body, source)

    @app.post("/api/vehicles/{doc_id}/sfx", status_code=202)
    async def generate_sfx(doc_id: str, body: GenerateBody = GenerateBody(),
                           source: str = "programmatic"):
        return submit_job("vehicle", store.get("vehicle", doc_id), body, source)

    @app.get("/api/jobs/{job_id}")
    async def job_status(job_id: str):
        try:
            return orch.job_status(job_id).to_dict()
        except UnknownIdError:
            raise ApiError(404, "not_found", f"job {job_id!r} not found")

    @app.get("/api/audio/{asset_id}.wav")
    async def get_audio(asset_id: str):
        try:
            asset, data = orch.get_asset(asset_id)
        except UnknownIdError:
            raise ApiError(404, "not_found", f"asset {asset_id!r} not found")
        return Response(content=data, media_type="audio/wav")

    # --- simulation ---

    @app.post("/api/vehicles/{doc_id}/simulate")
    async def simulate_vehicle(doc_id: str, body: SimulateBody):
        doc = store.get("vehicle", doc_id)
        if not doc.wheels and not doc.body_parts:
            raise ApiError(422, "invalid_content", "vehicle has no components")
        terrain = generate_terrain(body.terrain_seed)
        trace, outcome = simulate(doc, terrain, config.sim, config.catalog)
        return {"outcome": outcome.to_dict(), "trace": trace.to_dict()}

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
