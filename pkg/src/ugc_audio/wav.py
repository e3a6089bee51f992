"""Minimal RIFF/WAVE codec: PCM format 1, mono, 16-bit little-endian."""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np


class WavError(ValueError):
    pass


@dataclass(frozen=True)
class AudioClip:
    samples: np.ndarray  # int16, mono
    sample_rate_hz: int

    def __post_init__(self):
        if self.samples.dtype != np.int16 or self.samples.ndim != 1:
            raise WavError("samples must be a 1-D int16 array")
        if self.sample_rate_hz <= 0:
            raise WavError("sample rate must be positive")

    @property
    def duration_s(self) -> float:
        return len(self.samples) / self.sample_rate_hz

    def __eq__(self, other):
        if not isinstance(other, AudioClip):
            return NotImplemented
        return (self.sample_rate_hz == other.sample_rate_hz
                and np.array_equal(self.samples, other.samples))


def encode_wav(clip: AudioClip) -> bytes:
    """Canonical 44-byte header followed by raw little-endian samples."""
    data = clip.samples.astype("<i2").tobytes()
    byte_rate = clip.sample_rate_hz * 2  # mono, 16-bit
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF", 36 + len(data), b"WAVE",
        b"fmt ", 16,
        1,                      # PCM
        1,                      # mono
        clip.sample_rate_hz,
        byte_rate,
        2,                      # block align
        16,                     # bits per sample
        b"data", len(data),
    )
    return header + data


def decode_wav(data: bytes) -> AudioClip:
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise WavError("not a RIFF/WAVE file")

    fmt = None
    pcm = None
    pos = 12
    while pos + 8 <= len(data):
        chunk_id = data[pos:pos + 4]
        (chunk_size,) = struct.unpack_from("<I", data, pos + 4)
        body = data[pos + 8:pos + 8 + chunk_size]
        if len(body) < chunk_size:
            raise WavError(f"truncated {chunk_id!r} chunk")
        if chunk_id == b"fmt ":
            if chunk_size < 16:
                raise WavError("fmt chunk too short")
            fmt = struct.unpack_from("<HHIIHH", body)
        elif chunk_id == b"data":
            pcm = body
        pos += 8 + chunk_size + (chunk_size & 1)  # chunks are word-aligned

    if fmt is None:
        raise WavError("missing fmt chunk")
    if pcm is None:
        raise WavError("missing data chunk")

    format_tag, channels, sample_rate, _byte_rate, _block_align, bits = fmt
    if format_tag != 1:
        raise WavError(f"unsupported format tag {format_tag} (PCM only)")
    if channels != 1:
        raise WavError(f"unsupported channel count {channels} (mono only)")
    if bits != 16:
        raise WavError(f"unsupported bit depth {bits} (16-bit only)")
    if len(pcm) % 2:
        raise WavError("data chunk has an odd byte count")

    samples = np.frombuffer(pcm, dtype="<i2").astype(np.int16)
    return AudioClip(samples=samples, sample_rate_hz=sample_rate)
