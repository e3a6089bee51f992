import io
import json

import pytest
from fastapi.testclient import TestClient
from PIL import Image

from ugc_audio.config import Config
from ugc_audio.content_model import dumps, loads
from ugc_audio.fixtures import load_level, load_vehicle
from ugc_audio.service_api import create_app
from ugc_audio.wav import decode_wav


@pytest.fixture
def client(tmp_path):
    config = Config(data_dir=str(tmp_path))
    app = create_app(config)
    with TestClient(app) as c:
        yield c
    app.state.orchestrator.shutdown()


def level_doc(name="all_blue"):
    return json.loads(dumps(load_level(name)))


def vehicle_doc(name="wooden_light"):
    return json.loads(dumps(load_vehicle(name)))


def poll_done(client, job_id, tries=200):
    for _ in range(tries):
        job = client.get(f"/api/jobs/{job_id}").json()
        if job["status"] in ("done", "failed"):
            return job
    raise AssertionError("job never settled")


def test_level_crud(client):
    doc = level_doc()
    assert client.post("/api/levels", json=doc).status_code == 201
    got = client.get(f"/api/levels/{doc['id']}")
    assert got.status_code == 200
    assert got.json() == doc
    assert doc["id"] in client.get("/api/levels").json()["ids"]


def test_put_invalid_level_rejected(client):
    doc = level_doc()
    doc["goal"] = [9999.0, 9999.0]
    resp = client.put(f"/api/levels/{doc['id']}", json=doc)
    assert resp.status_code == 400
    body = resp.json()["error"]
    assert body["machine_code"] == "invalid_content"
    assert "goal" in body["message"]


def test_unknown_level_404(client):
    resp = client.get("/api/levels/nope")
    assert resp.status_code == 404
    assert resp.json()["error"]["machine_code"] == "not_found"


def test_prompt_preview_is_side_effect_free(client, tmp_path):
    doc = level_doc()
    client.post("/api/levels", json=doc)
    resp = client.post(f"/api/levels/{doc['id']}/prompt")
    assert resp.status_code == 200
    assert resp.json()["text"] == \
        "90s game vibe with peaceful chiptunes and 8-bit melodies"
    assert not list((tmp_path / "assets").glob("*.wav"))
    assert not (tmp_path / "index.jsonl").exists()


def test_vehicle_prompt_preview(client):
    doc = vehicle_doc()
    client.post("/api/vehicles", json=doc)
    resp = client.post(f"/api/vehicles/{doc['id']}/prompt")
    assert resp.json()["text"] == "light vehicle with wooden wheels"


def test_wheel_less_vehicle_prompt_422(client):
    doc = vehicle_doc("no_wheel")
    client.post("/api/vehicles", json=doc)
    resp = client.post(f"/api/vehicles/{doc['id']}/prompt")
    assert resp.status_code == 422
    assert resp.json()["error"]["machine_code"] == "wheelless_vehicle"


def test_music_end_to_end(client):
    doc = level_doc()
    client.post("/api/levels", json=doc)
    resp = client.post(f"/api/levels/{doc['id']}/music", json={})
    assert resp.status_code == 202
    job = poll_done(client, resp.json()["job_id"])
    assert job["status"] == "done"

    audio = client.get(f"/api/audio/{job['asset_id']}.wav")
    assert audio.status_code == 200
    assert audio.headers["content-type"].startswith("audio/wav")
    clip = decode_wav(audio.content)
    assert len(clip.samples) == 256000


def test_idempotent_generation_same_asset(client):
    doc = level_doc()
    client.post("/api/levels", json=doc)
    first = poll_done(client, client.post(
        f"/api/levels/{doc['id']}/music", json={}).json()["job_id"])
    second = poll_done(client, client.post(
        f"/api/levels/{doc['id']}/music", json={}).json()["job_id"])
    assert first["asset_id"] == second["asset_id"]


def test_prompt_override_changes_asset(client):
    doc = level_doc()
    client.post("/api/levels", json=doc)
    plain = poll_done(client, client.post(
        f"/api/levels/{doc['id']}/music", json={}).json()["job_id"])
    edited = poll_done(client, client.post(
        f"/api/levels/{doc['id']}/music",
        json={"prompt_override": "gentle rain on a tin roof"}).json()["job_id"])
    assert edited["status"] == "done"
    assert edited["asset_id"] != plain["asset_id"]
    assert edited["prompt"]["text"] == "gentle rain on a tin roof"


def test_sfx_end_to_end(client):
    doc = vehicle_doc()
    client.post("/api/vehicles", json=doc)
    job = poll_done(client, client.post(
        f"/api/vehicles/{doc['id']}/sfx", json={}).json()["job_id"])
    assert job["status"] == "done"
    audio = client.get(f"/api/audio/{job['asset_id']}.wav")
    assert len(decode_wav(audio.content).samples) == 80000


def test_caption_flow(client):
    buf = io.BytesIO()
    Image.new("RGB", (64, 64), (10, 120, 200)).save(buf, format="PNG")
    doc = vehicle_doc()
    client.post("/api/vehicles", json=doc)

    # caption source before any upload -> error
    resp = client.post(f"/api/vehicles/{doc['id']}/prompt?source=caption")
    assert resp.status_code == 400
    assert resp.json()["error"]["machine_code"] == "no_caption"

    resp = client.post(f"/api/captions?content_id={doc['id']}",
                       content=buf.getvalue())
    assert resp.status_code == 200
    caption = resp.json()["caption"]
    assert caption

    resp = client.post(f"/api/vehicles/{doc['id']}/prompt?source=caption")
    assert resp.status_code == 200
    assert resp.json()["text"].lower().startswith("vehicle")
    assert resp.json()["source"] == "caption"


def test_simulate_endpoint(client):
    doc = vehicle_doc("no_wheel")
    client.post("/api/vehicles", json=doc)
    resp = client.post(f"/api/vehicles/{doc['id']}/simulate",
                       json={"terrain_seed": 42})
    assert resp.status_code == 200
    body = resp.json()
    assert body["outcome"]["verdict"] == "stuck"
    assert body["trace"]["samples"][0]["t"] == 0.0


def test_error_bodies_are_json(client):
    for resp in [client.get("/api/jobs/nope"), client.get("/api/audio/nope.wav"),
                 client.get("/api/vehicles/nope")]:
        assert resp.headers["content-type"].startswith("application/json")
        assert "error" in resp.json()
