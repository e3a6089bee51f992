"""Text prompt construction for the music and sound-effect generators."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .content_model import Catalog, DEFAULT_CATALOG, VehicleSpec, vehicle_total_mass


class PromptKind(Enum):
    MUSIC = "music"
    SFX = "sfx"


class PromptSource(Enum):
    PROGRAMMATIC = "programmatic"
    CAPTION = "caption"


MUSIC_TEMPLATE = "90s game vibe with {mood} chiptunes and 8-bit melodies"
MUSIC_DURATION_S = 8.0
SFX_DURATION_S = 5.0
MUSIC_SAMPLE_RATE_HZ = 32000
SFX_SAMPLE_RATE_HZ = 16000

# light < 30 kg <= medium < 80 kg <= heavy
LIGHT_MAX_KG = 30.0
MEDIUM_MAX_KG = 80.0


class PromptError(ValueError):
    pass


@dataclass(frozen=True)
class PromptSpec:
    text: str
    kind: PromptKind
    duration_s: float
    sample_rate_hz: int
    source: PromptSource
    melody_ref: str | None = None

    def __post_init__(self):
        if not self.text or self.text != self.text.strip():
            raise PromptError("prompt text must be non-empty with no surrounding whitespace")
        if any(ord(c) < 32 for c in self.text):
            raise PromptError("prompt text contains control characters")
        if self.duration_s <= 0:
            raise PromptError("duration must be positive")
        if self.melody_ref is not None and self.kind is not PromptKind.MUSIC:
            raise PromptError("melody reference only applies to music prompts")

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "kind": self.kind.value,
            "duration_s": self.duration_s,
            "sample_rate_hz": self.sample_rate_hz,
            "source": self.source.value,
            "melody_ref": self.melody_ref,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PromptSpec":
        return cls(
            text=data["text"],
            kind=PromptKind(data["kind"]),
            duration_s=float(data["duration_s"]),
            sample_rate_hz=int(data["sample_rate_hz"]),
            source=PromptSource(data["source"]),
            melody_ref=data.get("melody_ref"),
        )


def mass_class(total_mass_kg: float, light_max_kg: float = LIGHT_MAX_KG,
               medium_max_kg: float = MEDIUM_MAX_KG) -> str:
    if total_mass_kg < light_max_kg:
        return "light"
    if total_mass_kg < medium_max_kg:
        return "medium"
    return "heavy"


def music_prompt(mood: str, melody_ref: str | None = None,
                 template: str = MUSIC_TEMPLATE) -> PromptSpec:
    """Fill the music template with a gradient mood phrase."""
    return PromptSpec(
        text=template.format(mood=mood),
        kind=PromptKind.MUSIC,
        duration_s=MUSIC_DURATION_S,
        sample_rate_hz=MUSIC_SAMPLE_RATE_HZ,
        source=PromptSource.PROGRAMMATIC,
        melody_ref=melody_ref,
    )


def wheel_descriptor(vehicle: VehicleSpec, catalog: Catalog = DEFAULT_CATALOG) -> str:
    """Descriptor of the strict-majority wheel type, else "mixed wheels"."""
    if not vehicle.wheels:
        raise PromptError("vehicle has no wheels")
    counts: dict = {}
    for w in vehicle.wheels:
        counts[w.type] = counts.get(w.type, 0) + 1
    top_type, top_count = max(counts.items(), key=lambda kv: kv[1])
    if top_count * 2 > len(vehicle.wheels):
        return catalog.wheels[top_type].descriptor
    return "mixed wheels"


def sfx_prompt(vehicle: VehicleSpec, catalog: Catalog = DEFAULT_CATALOG,
               light_max_kg: float = LIGHT_MAX_KG,
               medium_max_kg: float = MEDIUM_MAX_KG) -> PromptSpec:
    """Describe a vehicle by its weight class and wheel material.

    Wheel-less vehicles are rejected: there is no sound-producing contact,
    and callers can still fall back to the caption path.
    """
    if not vehicle.wheels:
        raise PromptError("cannot build a sound-effect prompt for a wheel-less vehicle")
    cls = mass_class(vehicle_total_mass(vehicle, catalog), light_max_kg, medium_max_kg)
    return PromptSpec(
        text=f"{cls} vehicle with {wheel_descriptor(vehicle, catalog)}",
        kind=PromptKind.SFX,
        duration_s=SFX_DURATION_S,
        sample_rate_hz=SFX_SAMPLE_RATE_HZ,
        source=PromptSource.PROGRAMMATIC,
    )


def caption_prompt(caption: str, kind: PromptKind) -> PromptSpec:
    """Turn an external image caption into a prompt.

    Sound-effect prompts must lead with "vehicle"; the caption itself is
    kept verbatim and only prefixed when needed.
    """
    text = caption.strip()
    if not text:
        raise PromptError("caption is empty")
    if kind is PromptKind.SFX and not text.lower().startswith("vehicle"):
        text = f"vehicle, {text}"
    if kind is PromptKind.MUSIC:
        duration, rate = MUSIC_DURATION_S, MUSIC_SAMPLE_RATE_HZ
    else:
        duration, rate = SFX_DURATION_S, SFX_SAMPLE_RATE_HZ
    return PromptSpec(
        text=text,
        kind=kind,
        duration_s=duration,
        sample_rate_hz=rate,
        source=PromptSource.CAPTION,
    )
