"""Paths to the bundled JSON fixtures (reference levels, vehicles, terrain).

Fixtures live as plain JSON under fixtures/ at the repository root so
other tooling can reuse them byte-for-byte.
"""

from __future__ import annotations

import os
from pathlib import Path

from .content_model import LevelSpec, VehicleSpec, loads

REFERENCE_TERRAIN_SEED = 42


def fixtures_dir() -> Path:
    override = os.environ.get("UGC_AUDIO_FIXTURES")
    if override:
        return Path(override)
    return Path(__file__).resolve().parents[2] / "fixtures"


def load_level(name: str) -> LevelSpec:
    doc = loads((fixtures_dir() / f"level_{name}.json").read_text())
    assert isinstance(doc, LevelSpec)
    return doc


def load_vehicle(name: str) -> VehicleSpec:
    doc = loads((fixtures_dir() / f"vehicle_{name}.json").read_text())
    assert isinstance(doc, VehicleSpec)
    return doc
