import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ugc_audio.color_mood import (DEFAULT_ANCHORS, MOODS, NamedColor, Gradient,
                                  Rgb, classify_color, gradient_mood, mood_word)

from oracles import ORACLE_TABLE, oracle_mood, oracle_nearest_color

rgb_values = st.integers(min_value=0, max_value=255)
rgb_strategy = st.builds(Rgb, rgb_values, rgb_values, rgb_values)
gradient_strategy = st.builds(
    Gradient, st.lists(rgb_strategy, min_size=2, max_size=8).map(tuple))


def test_oracle_table_matches_production_table():
    for name, anchor, mood in ORACLE_TABLE:
        named = NamedColor(name)
        assert DEFAULT_ANCHORS[named].as_tuple() == anchor
        assert MOODS[named] == mood


def test_rgb_rejects_out_of_range():
    with pytest.raises(ValueError):
        Rgb(256, 0, 0)
    with pytest.raises(ValueError):
        Rgb(0, -1, 0)


def test_anchors_classify_to_themselves():
    for named, anchor in DEFAULT_ANCHORS.items():
        assert classify_color(anchor) is named


def test_classify_examples():
    assert classify_color(Rgb(255, 0, 0)) is NamedColor.RED
    assert mood_word(NamedColor.RED) == "intense"
    assert classify_color(Rgb(0, 0, 0)) is NamedColor.BLACK
    # brute-force distance scan puts (40, 40, 200) closest to blue
    assert classify_color(Rgb(40, 40, 200)) is NamedColor.BLUE


def test_classify_agrees_with_oracle_on_lattice():
    # coarse 17-step lattice over the whole cube: 3375 points
    for r in range(0, 256, 17):
        for g in range(0, 256, 17):
            for b in range(0, 256, 17):
                assert classify_color(Rgb(r, g, b)).value == \
                    oracle_nearest_color((r, g, b))


def test_tie_breaks_to_earlier_catalog_entry():
    # (0, 64, 0) is exactly equidistant from green (0,128,0) and black (0,0,0);
    # green comes first in the catalog, so both implementations pick it
    point = Rgb(0, 64, 0)
    assert classify_color(point) is NamedColor.GREEN
    assert oracle_nearest_color((0, 64, 0)) == "green"


def test_gradient_requires_two_stops():
    with pytest.raises(ValueError):
        Gradient((Rgb(0, 0, 0),))


def test_gradient_mood_examples():
    all_blue = Gradient((Rgb(0, 0, 255), Rgb(20, 20, 240), Rgb(40, 40, 200)))
    assert gradient_mood(all_blue) == "peaceful"

    rainbow = Gradient((Rgb(255, 0, 0), Rgb(255, 165, 0),
                        Rgb(255, 255, 0), Rgb(0, 128, 0)))
    assert gradient_mood(rainbow) == "playful"

    bw = Gradient((Rgb(0, 0, 0), Rgb(255, 255, 255)))
    assert gradient_mood(bw) == "dark and simple"


def test_neutrals_do_not_count_toward_rainbow():
    stops = (Rgb(0, 0, 0), Rgb(255, 255, 255), Rgb(139, 69, 19),
             Rgb(255, 0, 0), Rgb(0, 0, 255))
    # only two non-neutral colors -> not a rainbow
    assert gradient_mood(Gradient(stops)) != "playful"


@settings(max_examples=300)
@given(gradient_strategy)
def test_gradient_mood_matches_oracle(gradient):
    expected = oracle_mood([s.as_tuple() for s in gradient.stops])
    assert gradient_mood(gradient) == expected


@given(gradient_strategy, st.randoms())
def test_permuting_stops_preserves_playful_verdict(gradient, rnd):
    shuffled = list(gradient.stops)
    rnd.shuffle(shuffled)
    before = gradient_mood(gradient) == "playful"
    after = gradient_mood(Gradient(tuple(shuffled))) == "playful"
    assert before == after


@given(gradient_strategy)
def test_phrase_has_at_most_two_mood_words(gradient):
    phrase = gradient_mood(gradient)
    if phrase == "playful":
        return
    words = phrase.split(" and ")
    assert 1 <= len(words) <= 2
    mood_words = {mood for _, _, mood in ORACLE_TABLE}
    assert all(w in mood_words for w in words)
