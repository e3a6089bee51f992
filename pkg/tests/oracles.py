"""Independent brute-force oracles; deliberately share no code with the
production modules (the anchor/mood table is restated here and a test
asserts the two copies agree)."""

# (name, (r, g, b), mood) in catalog order
ORACLE_TABLE = [
    ("red", (255, 0, 0), "intense"),
    ("orange", (255, 165, 0), "energetic"),
    ("yellow", (255, 255, 0), "cheery"),
    ("green", (0, 128, 0), "fresh"),
    ("cyan", (0, 255, 255), "lively"),
    ("blue", (0, 0, 255), "peaceful"),
    ("purple", (128, 0, 128), "mysterious"),
    ("pink", (255, 192, 203), "cute"),
    ("brown", (139, 69, 19), "practical"),
    ("black", (0, 0, 0), "dark"),
    ("white", (255, 255, 255), "simple"),
]

_NEUTRAL = {"black", "white", "brown"}


def oracle_nearest_color(rgb):
    """Exhaustive scan; first minimum wins (catalog order tie-break)."""
    best_name = None
    best_d = None
    for name, anchor, _mood in ORACLE_TABLE:
        d = sum((a - b) ** 2 for a, b in zip(rgb, anchor))
        if best_d is None or d < best_d:
            best_name, best_d = name, d
    return best_name


def oracle_mood(stops):
    """Direct restatement of the gradient-to-mood rules."""
    names = [oracle_nearest_color(s) for s in stops]
    moods = {name: mood for name, _, mood in ORACLE_TABLE}

    if len({n for n in names if n not in _NEUTRAL}) >= 4:
        return "playful"

    seen = []
    for n in names:
        if n not in seen:
            seen.append(n)
    ranked = sorted(seen, key=lambda n: (-names.count(n), names.index(n)))
    if len(ranked) == 1:
        return moods[ranked[0]]
    return moods[ranked[0]] + " and " + moods[ranked[1]]
