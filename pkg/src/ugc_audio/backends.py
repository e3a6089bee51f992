"""Clients for the external inference services, plus deterministic mocks.

The wire protocol (docs/backend-protocol.md):
  POST /caption  {image_base64}                                  -> {caption}
  POST /generate {prompt, duration_s, sample_rate_hz, seed?,
                  melody_wav_base64?}                            -> audio/wav body

Env vars CAPTIONER_URL, MUSICGEN_URL, AUDIOGEN_URL select remote
endpoints; when unset the deterministic mock is used.
"""

from __future__ import annotations

import base64
import hashlib
import os
from dataclasses import dataclass
from enum import Enum

import numpy as np
import requests

from .prompt_synthesis import PromptKind, PromptSpec
from .wav import AudioClip, WavError, decode_wav


class BackendKind(Enum):
    CAPTIONER = "captioner"
    MUSIC_GEN = "music_gen"
    SFX_GEN = "sfx_gen"


class BackendMode(Enum):
    REMOTE = "remote"
    MOCK = "mock"


class BackendError(Exception):
    def __init__(self, kind: BackendKind, message: str, retryable: bool = False):
        super().__init__(f"{kind.value}: {message}")
        self.kind = kind
        self.retryable = retryable


@dataclass(frozen=True)
class BackendDescriptor:
    kind: BackendKind
    mode: BackendMode
    endpoint_url: str | None = None
    timeout_s: float = 30.0

    def __post_init__(self):
        if self.timeout_s <= 0:
            raise ValueError("timeout must be positive")
        if self.mode is BackendMode.REMOTE and not self.endpoint_url:
            raise ValueError("remote backend needs an endpoint URL")


_ENV_VARS = {
    BackendKind.CAPTIONER: "CAPTIONER_URL",
    BackendKind.MUSIC_GEN: "MUSICGEN_URL",
    BackendKind.SFX_GEN: "AUDIOGEN_URL",
}


def backend_from_env(kind: BackendKind, env: dict | None = None) -> BackendDescriptor:
    env = os.environ if env is None else env
    url = env.get(_ENV_VARS[kind])
    if url:
        return BackendDescriptor(kind=kind, mode=BackendMode.REMOTE, endpoint_url=url)
    return BackendDescriptor(kind=kind, mode=BackendMode.MOCK)


# Phrases the mock captioner cycles through, selected by image digest.
MOCK_CAPTIONS = (
    "a 2d platform game with colorful platforms",
    "a small vehicle with round wheels",
    "a pixel art landscape with floating islands",
    "a cartoon cart rolling over bumpy ground",
    "a retro game scene with bright sky",
    "a contraption made of boxes and wheels",
)

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def caption_image(image_png: bytes, backend: BackendDescriptor) -> str:
    """Ask the image-to-text backend to describe a rendered PNG."""
    if backend.kind is not BackendKind.CAPTIONER:
        raise BackendError(backend.kind, "caption_image needs a captioner backend")
    if not image_png.startswith(_PNG_MAGIC):
        raise BackendError(backend.kind, "input is not a PNG image")

    if backend.mode is BackendMode.MOCK:
        digest = hashlib.sha256(image_png).digest()
        return MOCK_CAPTIONS[digest[0] % len(MOCK_CAPTIONS)]

    url = backend.endpoint_url.rstrip("/") + "/caption"
    payload = {"image_base64": base64.b64encode(image_png).decode("ascii")}
    try:
        resp = requests.post(url, json=payload, timeout=backend.timeout_s)
    except requests.Timeout as exc:
        raise BackendError(backend.kind, f"timeout after {backend.timeout_s}s",
                           retryable=True) from exc
    except requests.ConnectionError as exc:
        raise BackendError(backend.kind, f"connection failed: {exc}",
                           retryable=True) from exc
    if not resp.ok:
        raise BackendError(backend.kind, f"HTTP {resp.status_code}",
                           retryable=resp.status_code >= 500)
    try:
        caption = resp.json()["caption"]
    except (ValueError, KeyError) as exc:
        raise BackendError(backend.kind, f"malformed response: {exc}") from exc
    if not isinstance(caption, str) or not caption.strip():
        raise BackendError(backend.kind, "backend returned an empty caption")
    return caption


def _mock_clip(prompt: PromptSpec, seed: int | None) -> AudioClip:
    # Three sine tones with frequencies derived from the prompt digest, so
    # different prompts are audibly different and identical ones bit-equal.
    seed_part = b"" if seed is None else str(seed).encode()
    digest = hashlib.sha256(prompt.text.encode() + b"\x1f" + seed_part).digest()
    freqs = [110.0 + digest[i] * 7.0 for i in range(3)]
    n = round(prompt.duration_s * prompt.sample_rate_hz)
    t = np.arange(n, dtype=np.float64) / prompt.sample_rate_hz
    wave = sum(np.sin(2 * np.pi * f * t) for f in freqs) / 3.0
    samples = np.clip(wave * 0.5 * 32767.0, -32768, 32767).astype(np.int16)
    return AudioClip(samples=samples, sample_rate_hz=prompt.sample_rate_hz)


def generate_audio(prompt: PromptSpec, backend: BackendDescriptor,
                   seed: int | None = None,
                   melody_wav: bytes | None = None) -> AudioClip:
    """Generate a clip for the prompt; mock mode synthesizes sine tones."""
    expected = {PromptKind.MUSIC: BackendKind.MUSIC_GEN, PromptKind.SFX: BackendKind.SFX_GEN}
    if backend.kind is not expected[prompt.kind]:
        raise BackendError(backend.kind,
                           f"backend does not handle {prompt.kind.value} prompts")

    if backend.mode is BackendMode.MOCK:
        return _mock_clip(prompt, seed)

    url = backend.endpoint_url.rstrip("/") + "/generate"
    payload = {
        "prompt": prompt.text,
        "duration_s": prompt.duration_s,
        "sample_rate_hz": prompt.sample_rate_hz,
    }
    if seed is not None:
        payload["seed"] = seed
    if melody_wav is not None and prompt.kind is PromptKind.MUSIC:
        payload["melody_wav_base64"] = base64.b64encode(melody_wav).decode("ascii")
    try:
        resp = requests.post(url, json=payload, timeout=backend.timeout_s)
    except requests.Timeout as exc:
        raise BackendError(backend.kind, f"timeout after {backend.timeout_s}s",
                           retryable=True) from exc
    except requests.ConnectionError as exc:
        raise BackendError(backend.kind, f"connection failed: {exc}",
                           retryable=True) from exc
    if not resp.ok:
        raise BackendError(backend.kind, f"HTTP {resp.status_code}",
                           retryable=resp.status_code >= 500)
    try:
        clip = decode_wav(resp.content)
    except WavError as exc:
        raise BackendError(backend.kind, f"malformed WAV response: {exc}") from exc
    expected_n = round(prompt.duration_s * prompt.sample_rate_hz)
    if abs(len(clip.samples) - expected_n) > 1:
        raise BackendError(
            backend.kind,
            f"duration mismatch: got {len(clip.samples)} samples, expected {expected_n}")
    return clip
