"""Nearest-color classification and gradient mood phrases.

Background gradients get reduced to a short mood phrase: each stop is
snapped to the closest of eleven named colors, each of which carries a
mood word.  Gradients with four or more distinct "rainbow" colors
collapse to "playful".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class NamedColor(Enum):
    RED = "red"
    ORANGE = "orange"
    YELLOW = "yellow"
    GREEN = "green"
    CYAN = "cyan"
    BLUE = "blue"
    PURPLE = "purple"
    PINK = "pink"
    BROWN = "brown"
    BLACK = "black"
    WHITE = "white"


@dataclass(frozen=True)
class Rgb:
    r: int
    g: int
    b: int

    def __post_init__(self):
        for name in ("r", "g", "b"):
            v = getattr(self, name)
            if not isinstance(v, int) or not 0 <= v <= 255:
                raise ValueError(f"channel {name}={v!r} outside [0, 255]")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.g, self.b)


@dataclass(frozen=True)
class Gradient:
    stops: tuple[Rgb, ...]

    def __post_init__(self):
        if len(self.stops) < 2:
            raise ValueError("gradient needs at least two stops")


# Anchor values are canonical CSS colors; order matters for tie-breaking.
DEFAULT_ANCHORS: dict[NamedColor, Rgb] = {
    NamedColor.RED: Rgb(255, 0, 0),
    NamedColor.ORANGE: Rgb(255, 165, 0),
    NamedColor.YELLOW: Rgb(255, 255, 0),
    NamedColor.GREEN: Rgb(0, 128, 0),
    NamedColor.CYAN: Rgb(0, 255, 255),
    NamedColor.BLUE: Rgb(0, 0, 255),
    NamedColor.PURPLE: Rgb(128, 0, 128),
    NamedColor.PINK: Rgb(255, 192, 203),
    NamedColor.BROWN: Rgb(139, 69, 19),
    NamedColor.BLACK: Rgb(0, 0, 0),
    NamedColor.WHITE: Rgb(255, 255, 255),
}

MOODS: dict[NamedColor, str] = {
    NamedColor.RED: "intense",
    NamedColor.ORANGE: "energetic",
    NamedColor.YELLOW: "cheery",
    NamedColor.GREEN: "fresh",
    NamedColor.CYAN: "lively",
    NamedColor.BLUE: "peaceful",
    NamedColor.PURPLE: "mysterious",
    NamedColor.PINK: "cute",
    NamedColor.BROWN: "practical",
    NamedColor.BLACK: "dark",
    NamedColor.WHITE: "simple",
}

# Colors excluded from the rainbow count (they still have moods and still
# compete in the frequency ranking).
NEUTRALS = frozenset({NamedColor.BLACK, NamedColor.WHITE, NamedColor.BROWN})

RAINBOW_MOOD = "playful"


class ColorTable:
    """Anchor/mood table; the defaults are compiled in but overridable."""

    def __init__(self, anchors: dict[NamedColor, Rgb] | None = None,
                 moods: dict[NamedColor, str] | None = None):
        self.anchors = dict(anchors or DEFAULT_ANCHORS)
        self.moods = dict(moods or MOODS)
        if set(self.anchors) != set(NamedColor) or set(self.moods) != set(NamedColor):
            raise ValueError("anchor/mood table must cover all eleven colors")

    def classify(self, color: Rgb) -> NamedColor:
        best = None
        best_d = None
        for named in NamedColor:  # catalog order breaks ties
            a = self.anchors[named]
            d = (color.r - a.r) ** 2 + (color.g - a.g) ** 2 + (color.b - a.b) ** 2
            if best_d is None or d < best_d:
                best, best_d = named, d
        return best

    def mood_of(self, named: NamedColor) -> str:
        return self.moods[named]

    def gradient_mood(self, gradient: Gradient) -> str:
        classified = [self.classify(stop) for stop in gradient.stops]
        rainbow = {c for c in classified if c not in NEUTRALS}
        if len(rainbow) >= 4:
            return RAINBOW_MOOD

        counts: dict[NamedColor, int] = {}
        first_seen: dict[NamedColor, int] = {}
        for i, c in enumerate(classified):
            counts[c] = counts.get(c, 0) + 1
            first_seen.setdefault(c, i)
        ranked = sorted(counts, key=lambda c: (-counts[c], first_seen[c]))
        if len(ranked) == 1:
            return self.moods[ranked[0]]
        return f"{self.moods[ranked[0]]} and {self.moods[ranked[1]]}"


_DEFAULT_TABLE = ColorTable()


def classify_color(color: Rgb, table: ColorTable | None = None) -> NamedColor:
    """Snap an arbitrary RGB color to the nearest named color.

    Nearest by squared Euclidean distance in raw RGB; equidistant anchors
    resolve to the earlier catalog entry.
    """
    return (table or _DEFAULT_TABLE).classify(color)


def mood_word(named: NamedColor, table: ColorTable | None = None) -> str:
    return (table or _DEFAULT_TABLE).mood_of(named)


def gradient_mood(gradient: Gradient, table: ColorTable | None = None) -> str:
    """Mood phrase for a whole gradient.

    Four or more distinct non-neutral colors make a rainbow ("playful");
    otherwise the one or two most frequent colors supply the words,
    joined with " and ".  Ties rank by first occurrence in the stop list.
    """
    return (table or _DEFAULT_TABLE).gradient_mood(gradient)
