"""System configuration: data dir, backends, catalogs, sim and prompt tuning.

Precedence: flags override env vars, env vars override the config file,
the file overrides compiled-in defaults.  Files may be TOML or JSON.
"""

from __future__ import annotations

import json
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from pathlib import Path

from .backends import BackendDescriptor, BackendKind, backend_from_env
from .color_mood import ColorTable, NamedColor, Rgb
from .content_model import (BodyPartProps, BodyPartType, Catalog, WheelProps,
                            WheelType)
from .sim import SimConfig

_KNOWN_KEYS = {
    "data_dir", "max_concurrent_jobs", "backends", "anchors", "moods",
    "wheel_catalog", "body_catalog", "sim", "mass_thresholds", "music_template",
}


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    data_dir: str = "./data"
    max_concurrent_jobs: int = 2
    color_table: ColorTable = field(default_factory=ColorTable)
    catalog: Catalog = field(default_factory=Catalog)
    sim: SimConfig = field(default_factory=SimConfig)
    light_max_kg: float = 30.0
    medium_max_kg: float = 80.0
    music_template: str | None = None
    captioner: BackendDescriptor = field(
        default_factory=lambda: backend_from_env(BackendKind.CAPTIONER))
    music_backend: BackendDescriptor = field(
        default_factory=lambda: backend_from_env(BackendKind.MUSIC_GEN))
    sfx_backend: BackendDescriptor = field(
        default_factory=lambda: backend_from_env(BackendKind.SFX_GEN))


def _parse_file(path: Path) -> dict:
    text = path.read_text()
    if path.suffix == ".toml":
        try:
            return tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"bad TOML in {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"bad JSON in {path}: {exc}") from exc


def load_config(path: str | os.PathLike | None = None,
                env: dict | None = None) -> Config:
    env = os.environ if env is None else env
    cfg = Config(
        captioner=backend_from_env(BackendKind.CAPTIONER, env),
        music_backend=backend_from_env(BackendKind.MUSIC_GEN, env),
        sfx_backend=backend_from_env(BackendKind.SFX_GEN, env),
    )
    if path is None:
        if env.get("UGC_AUDIO_DATA_DIR"):
            cfg.data_dir = env["UGC_AUDIO_DATA_DIR"]
        return cfg

    data = _parse_file(Path(path))
    unknown = set(data) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    if "data_dir" in data:
        cfg.data_dir = str(data["data_dir"])
    if "max_concurrent_jobs" in data:
        cfg.max_concurrent_jobs = int(data["max_concurrent_jobs"])
    if "music_template" in data:
        cfg.music_template = str(data["music_template"])

    if "anchors" in data or "moods" in data:
        anchors = dict(cfg.color_table.anchors)
        moods = dict(cfg.color_table.moods)
        for name, rgb in data.get("anchors", {}).items():
            anchors[NamedColor(name)] = Rgb(*rgb)
        for name, word in data.get("moods", {}).items():
            moods[NamedColor(name)] = str(word)
        cfg.color_table = ColorTable(anchors, moods)

    if "wheel_catalog" in data or "body_catalog" in data:
        wheels = dict(cfg.catalog.wheels)
        parts = dict(cfg.catalog.body_parts)
        for name, props in data.get("wheel_catalog", {}).items():
            wheels[WheelType(name)] = WheelProps(
                mass_kg=props["mass_kg"], friction=props["friction"],
                restitution=props["restitution"], radius_m=props["radius_m"],
                descriptor=props["descriptor"])
        for name, props in data.get("body_catalog", {}).items():
            parts[BodyPartType(name)] = BodyPartProps(
                mass_kg=props["mass_kg"], friction=props["friction"],
                size_m=tuple(props["size_m"]))
        cfg.catalog = Catalog(wheels=wheels, body_parts=parts)

    if "sim" in data:
        defaults = SimConfig()
        kwargs = {k: data["sim"].get(k, getattr(defaults, k))
                  for k in defaults.__dataclass_fields__}
        cfg.sim = SimConfig(**kwargs)

    if "mass_thresholds" in data:
        cfg.light_max_kg = float(data["mass_thresholds"].get("light_max_kg", cfg.light_max_kg))
        cfg.medium_max_kg = float(data["mass_thresholds"].get("medium_max_kg", cfg.medium_max_kg))

    if env.get("UGC_AUDIO_DATA_DIR"):
        cfg.data_dir = env["UGC_AUDIO_DATA_DIR"]
    return cfg
