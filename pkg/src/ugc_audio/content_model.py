"""User-generated content documents: platformer levels and built vehicles.

Documents are exchanged as UTF-8 JSON with a top-level schema_version.
Coordinates are meters, x rightward, y upward; the vehicle frame origin
sits at the chassis centroid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .color_mood import Gradient, Rgb

SCHEMA_VERSION = 1


class ContentError(ValueError):
    """Document could not be parsed at all (as opposed to failing validation)."""


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def as_list(self) -> list[float]:
        return [self.x, self.y]


class WheelType(Enum):
    WOODEN_WAGON_WHEEL = "wooden_wagon_wheel"
    RUBBER_CAR_TIRE = "rubber_car_tire"
    INFLATABLE_INNER_TUBE = "inflatable_inner_tube"


class BodyPartType(Enum):
    CARDBOARD_BOX = "cardboard_box"
    SKIS = "skis"
    CINDER_BLOCK = "cinder_block"
    STEEL_PIPE = "steel_pipe"


@dataclass(frozen=True)
class WheelProps:
    mass_kg: float
    friction: float
    restitution: float
    radius_m: float
    descriptor: str

    def __post_init__(self):
        if self.mass_kg <= 0 or self.radius_m <= 0:
            raise ValueError("wheel mass and radius must be positive")
        if self.friction < 0 or not 0 <= self.restitution <= 1:
            raise ValueError("wheel friction/restitution out of range")


@dataclass(frozen=True)
class BodyPartProps:
    mass_kg: float
    friction: float
    size_m: tuple[float, float]

    def __post_init__(self):
        if self.mass_kg <= 0 or self.friction < 0:
            raise ValueError("body part mass must be positive, friction >= 0")


# Plausible magnitudes; everything here can be overridden from a catalog file.
DEFAULT_WHEEL_CATALOG: dict[WheelType, WheelProps] = {
    WheelType.WOODEN_WAGON_WHEEL: WheelProps(8.0, 0.6, 0.1, 0.35, "wooden wheels"),
    WheelType.RUBBER_CAR_TIRE: WheelProps(12.0, 0.9, 0.3, 0.30, "rubber tires"),
    WheelType.INFLATABLE_INNER_TUBE: WheelProps(4.0, 0.7, 0.6, 0.40, "inflatable tires"),
}

DEFAULT_BODY_CATALOG: dict[BodyPartType, BodyPartProps] = {
    BodyPartType.CARDBOARD_BOX: BodyPartProps(2.0, 0.4, (0.6, 0.6)),
    BodyPartType.SKIS: BodyPartProps(5.0, 0.05, (1.8, 0.1)),
    BodyPartType.CINDER_BLOCK: BodyPartProps(15.0, 0.8, (0.4, 0.2)),
    BodyPartType.STEEL_PIPE: BodyPartProps(10.0, 0.5, (1.5, 0.15)),
}


@dataclass(frozen=True)
class Catalog:
    wheels: dict[WheelType, WheelProps] = field(
        default_factory=lambda: dict(DEFAULT_WHEEL_CATALOG))
    body_parts: dict[BodyPartType, BodyPartProps] = field(
        default_factory=lambda: dict(DEFAULT_BODY_CATALOG))


DEFAULT_CATALOG = Catalog()


@dataclass(frozen=True)
class Platform:
    position: Vec2
    size: Vec2
    color: Rgb


@dataclass(frozen=True)
class LevelSpec:
    id: str
    gradient: Gradient
    platforms: tuple[Platform, ...]
    goal: Vec2
    bounds: Vec2


@dataclass(frozen=True)
class WheelInstance:
    type: WheelType
    anchor: Vec2


@dataclass(frozen=True)
class BodyPartInstance:
    type: BodyPartType
    position: Vec2
    rotation: float


@dataclass(frozen=True)
class VehicleSpec:
    id: str
    wheels: tuple[WheelInstance, ...]
    body_parts: tuple[BodyPartInstance, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _rect_inside(pos: Vec2, size: Vec2, bounds: Vec2) -> bool:
    return (0 <= pos.x and 0 <= pos.y
            and pos.x + size.x <= bounds.x and pos.y + size.y <= bounds.y)


def validate_level(doc: LevelSpec) -> ValidationReport:
    """Semantic checks over a parsed level document; never mutates it."""
    violations = []
    if not doc.platforms:
        violations.append("level has no platforms")
    if doc.bounds.x <= 0 or doc.bounds.y <= 0:
        violations.append("bounds must be positive")
    else:
        if not (0 <= doc.goal.x <= doc.bounds.x and 0 <= doc.goal.y <= doc.bounds.y):
            violations.append("goal out of bounds")
        for i, p in enumerate(doc.platforms):
            if p.size.x <= 0 or p.size.y <= 0:
                violations.append(f"platform {i} has non-positive size")
            elif not _rect_inside(p.position, p.size, doc.bounds):
                violations.append(f"platform {i} out of bounds")
    if len(doc.gradient.stops) < 2:
        violations.append("gradient needs at least two stops")
    return ValidationReport(tuple(violations))


def validate_vehicle(doc: VehicleSpec, catalog: Catalog = DEFAULT_CATALOG) -> ValidationReport:
    """A component-less vehicle is valid content, just unfit to drive."""
    violations = []
    for i, w in enumerate(doc.wheels):
        if w.type not in catalog.wheels:
            violations.append(f"wheel {i} has unknown type {w.type}")
    for i, p in enumerate(doc.body_parts):
        if p.type not in catalog.body_parts:
            violations.append(f"body part {i} has unknown type {p.type}")
    return ValidationReport(tuple(violations))


def vehicle_total_mass(doc: VehicleSpec, catalog: Catalog = DEFAULT_CATALOG) -> float:
    """Sum of catalog masses over all components, in kilograms."""
    mass = 0.0
    for w in doc.wheels:
        mass += catalog.wheels[w.type].mass_kg
    for p in doc.body_parts:
        mass += catalog.body_parts[p.type].mass_kg
    return mass


# --- JSON (de)serialization ---------------------------------------------

def _rgb_to_json(c: Rgb) -> list[int]:
    return [c.r, c.g, c.b]


def _rgb_from_json(v) -> Rgb:
    if not (isinstance(v, list) and len(v) == 3):
        raise ContentError(f"expected [r, g, b], got {v!r}")
    return Rgb(*v)


def _vec2_from_json(v) -> Vec2:
    if not (isinstance(v, list) and len(v) == 2):
        raise ContentError(f"expected [x, y], got {v!r}")
    return Vec2(float(v[0]), float(v[1]))


def level_to_dict(doc: LevelSpec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "level",
        "id": doc.id,
        "gradient": [_rgb_to_json(s) for s in doc.gradient.stops],
        "platforms": [
            {"position": p.position.as_list(), "size": p.size.as_list(),
             "color": _rgb_to_json(p.color)}
            for p in doc.platforms
        ],
        "goal": doc.goal.as_list(),
        "bounds": doc.bounds.as_list(),
    }


def level_from_dict(data: dict) -> LevelSpec:
    try:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ContentError(f"unsupported schema_version {data.get('schema_version')!r}")
        return LevelSpec(
            id=str(data["id"]),
            gradient=Gradient(tuple(_rgb_from_json(s) for s in data["gradient"])),
            platforms=tuple(
                Platform(_vec2_from_json(p["position"]), _vec2_from_json(p["size"]),
                         _rgb_from_json(p["color"]))
                for p in data["platforms"]
            ),
            goal=_vec2_from_json(data["goal"]),
            bounds=_vec2_from_json(data["bounds"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ContentError):
            raise
        raise ContentError(f"malformed level document: {exc}") from exc


def vehicle_to_dict(doc: VehicleSpec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "vehicle",
        "id": doc.id,
        "wheels": [{"type": w.type.value, "anchor": w.anchor.as_list()} for w in doc.wheels],
        "body_parts": [
            {"type": p.type.value, "position": p.position.as_list(), "rotation": p.rotation}
            for p in doc.body_parts
        ],
    }


def vehicle_from_dict(data: dict) -> VehicleSpec:
    try:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ContentError(f"unsupported schema_version {data.get('schema_version')!r}")
        return VehicleSpec(
            id=str(data["id"]),
            wheels=tuple(
                WheelInstance(WheelType(w["type"]), _vec2_from_json(w["anchor"]))
                for w in data["wheels"]
            ),
            body_parts=tuple(
                BodyPartInstance(BodyPartType(p["type"]), _vec2_from_json(p["position"]),
                                 float(p["rotation"]))
                for p in data["body_parts"]
            ),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ContentError):
            raise
        raise ContentError(f"malformed vehicle document: {exc}") from exc


def dumps(doc: LevelSpec | VehicleSpec) -> str:
    """Canonical serialization; stable byte-for-byte for equal documents."""
    data = level_to_dict(doc) if isinstance(doc, LevelSpec) else vehicle_to_dict(doc)
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def loads(text: str) -> LevelSpec | VehicleSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ContentError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ContentError("document must be a JSON object")
    kind = data.get("kind")
    if kind == "level":
        return level_from_dict(data)
    if kind == "vehicle":
        return vehicle_from_dict(data)
    raise ContentError(f"unknown document kind {kind!r}")
