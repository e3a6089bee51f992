"""Generation job lifecycle and the content-addressed audio cache.

Layout under the data directory:
  assets/<cache-key>.wav   generated clips, written atomically
  index.jsonl              append-only record of every stored asset
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .backends import BackendDescriptor, BackendError, BackendKind, generate_audio
from .prompt_synthesis import PromptKind, PromptSpec
from .wav import AudioClip, encode_wav

_SEP = b"\x1f"


def cache_key(prompt: PromptSpec, seed: int | None = None) -> str:
    """Digest of the fields that determine the generated audio."""
    parts = [
        prompt.kind.value.encode(),
        prompt.text.encode(),
        f"{prompt.duration_s:.3f}".encode(),
        str(prompt.sample_rate_hz).encode(),
        b"" if seed is None else str(seed).encode(),
        (prompt.melody_ref or "").encode(),
    ]
    return hashlib.sha256(_SEP.join(parts)).hexdigest()


@dataclass(frozen=True)
class AudioAsset:
    id: str  # cache key
    wav_path: str  # relative to the data directory
    duration_s: float
    sample_rate_hz: int
    prompt_text: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "wav_path": self.wav_path,
            "duration_s": self.duration_s,
            "sample_rate_hz": self.sample_rate_hz,
            "prompt_text": self.prompt_text,
        }


@dataclass
class GenerationJob:
    id: str
    prompt: PromptSpec
    seed: int | None
    backend_kind: BackendKind
    status: str = "pending"  # pending | running | done | failed
    failure_reason: str | None = None
    asset_id: str | None = None
    created_at: float = field(default_factory=time.time)
    updated_at: float = field(default_factory=time.time)
    history: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "prompt": self.prompt.to_dict(),
            "seed": self.seed,
            "backend_kind": self.backend_kind.value,
            "status": self.status,
            "failure_reason": self.failure_reason,
            "asset_id": self.asset_id,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
        }


class UnknownIdError(KeyError):
    pass


class Orchestrator:
    """Resolves prompts to cached assets, invoking backends as needed.

    Thread-safe for concurrent submitters and pollers; at most
    max_concurrent_jobs backend calls run at once.
    """

    def __init__(self, data_dir: str | os.PathLike,
                 music_backend: BackendDescriptor,
                 sfx_backend: BackendDescriptor,
                 max_concurrent_jobs: int = 2,
                 generator=generate_audio):
        self.data_dir = Path(data_dir)
        self.assets_dir = self.data_dir / "assets"
        self.assets_dir.mkdir(parents=True, exist_ok=True)
        self.index_path = self.data_dir / "index.jsonl"
        self._backends = {PromptKind.MUSIC: music_backend, PromptKind.SFX: sfx_backend}
        self._generator = generator  # injectable for call counting in tests
        self._lock = threading.Lock()
        self._jobs: dict[str, GenerationJob] = {}
        self._assets: dict[str, AudioAsset] = {}
        self._pool = ThreadPoolExecutor(max_workers=max_concurrent_jobs)
        self._melody_bytes_for: callable = lambda asset_id: None
        self._load_index()

    def _load_index(self):
        """Restart path: trust only index entries whose file is still there."""
        if not self.index_path.exists():
            return
        with open(self.index_path, encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                if (self.data_dir / rec["wav_path"]).exists():
                    self._assets[rec["id"]] = AudioAsset(**rec)

    def set_melody_resolver(self, resolver):
        """resolver(asset_id) -> WAV bytes, used for melody conditioning."""
        self._melody_bytes_for = resolver

    def submit(self, prompt: PromptSpec, seed: int | None = None) -> GenerationJob:
        key = cache_key(prompt, seed)
        backend = self._backends[prompt.kind]
        job = GenerationJob(
            id=uuid.uuid4().hex,
            prompt=prompt,
            seed=seed,
            backend_kind=backend.kind,
        )
        with self._lock:
            if key in self._assets:
                job.status = "done"
                job.asset_id = key
                job.history = ["pending", "done"]
                job.updated_at = time.time()
                self._jobs[job.id] = job
                return job
            job.history = ["pending"]
            self._jobs[job.id] = job
        self._pool.submit(self._run_job, job.id, key)
        return job

    def _transition(self, job: GenerationJob, status: str):
        job.status = status
        job.history.append(status)
        job.updated_at = time.time()

    def _run_job(self, job_id: str, key: str):
        with self._lock:
            job = self._jobs[job_id]
            if key in self._assets:  # raced with an identical submission
                job.asset_id = key
                self._transition(job, "running")
                self._transition(job, "done")
                return
            self._transition(job, "running")
        try:
            melody_wav = None
            if job.prompt.melody_ref:
                melody_wav = self._melody_bytes_for(job.prompt.melody_ref)
            clip = self._generator(job.prompt, self._backends[job.prompt.kind],
                                   seed=job.seed, melody_wav=melody_wav)
            asset = self._store(key, clip, job.prompt)
        except (BackendError, OSError, ValueError) as exc:
            with self._lock:
                job.failure_reason = str(exc)
                self._transition(job, "failed")
            return
        with self._lock:
            self._assets[key] = asset
            job.asset_id = key
            self._transition(job, "done")

    def _store(self, key: str, clip: AudioClip, prompt: PromptSpec) -> AudioAsset:
        rel_path = f"assets/{key}.wav"
        final_path = self.data_dir / rel_path
        tmp_path = final_path.with_suffix(".wav.tmp")
        tmp_path.write_bytes(encode_wav(clip))
        os.replace(tmp_path, final_path)  # a partial WAV is never visible
        asset = AudioAsset(
            id=key,
            wav_path=rel_path,
            duration_s=clip.duration_s,
            sample_rate_hz=clip.sample_rate_hz,
            prompt_text=prompt.text,
        )
        with open(self.index_path, "a", encoding="utf-8") as f:
            f.write(json.dumps(asset.to_dict(), sort_keys=True) + "\n")
        return asset

    def job_status(self, job_id: str) -> GenerationJob:
        with self._lock:
            try:
                return self._jobs[job_id]
            except KeyError:
                raise UnknownIdError(job_id) from None

    def get_asset(self, asset_id: str) -> tuple[AudioAsset, bytes]:
        with self._lock:
            try:
                asset = self._assets[asset_id]
            except KeyError:
                raise UnknownIdError(asset_id) from None
        return asset, (self.data_dir / asset.wav_path).read_bytes()

    def wait(self, job_id: str, timeout_s: float = 30.0) -> GenerationJob:
        """Poll until the job leaves pending/running; test and CLI helper."""
        deadline = time.monotonic() + timeout_s
        while time.monotonic() < deadline:
            job = self.job_status(job_id)
            if job.status in ("done", "failed"):
                return job
            time.sleep(0.005)
        raise TimeoutError(f"job {job_id} still {self.job_status(job_id).status}")

    def shutdown(self):
        self._pool.shutdown(wait=True)
