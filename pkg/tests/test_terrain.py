import hashlib
import json
from pathlib import Path

import numpy as np
import pytest

from ugc_audio.terrain import SAMPLE_INTERVAL_M, TerrainParams, generate_terrain

GOLDEN = Path(__file__).parent / "golden"


def heightfield_checksum(terrain):
    blob = json.dumps([round(float(h), 9) for h in terrain.heights]).encode()
    return hashlib.sha256(blob).hexdigest()


def test_same_seed_same_heights():
    a = generate_terrain(123)
    b = generate_terrain(123)
    assert np.array_equal(a.heights, b.heights)


def test_different_seeds_differ():
    assert not np.array_equal(generate_terrain(1).heights,
                              generate_terrain(2).heights)


def test_zero_amplitude_is_flat():
    t = generate_terrain(5, TerrainParams(amplitude_m=0.0))
    assert np.all(t.heights == 0.0)


def test_starting_pad_is_flat():
    t = generate_terrain(99)
    pad_samples = int(5.0 / SAMPLE_INTERVAL_M) + 1
    assert np.all(t.heights[:pad_samples] == 0.0)


def test_heights_bounded_by_amplitude():
    params = TerrainParams(amplitude_m=0.8)
    t = generate_terrain(7, params)
    bump = 0.15 * params.amplitude_m
    assert np.all(np.abs(t.heights) <= params.amplitude_m + bump + 1e-9)
    assert np.all(np.isfinite(t.heights))


def test_golden_checksum_seed_42():
    expected = (GOLDEN / "terrain_seed42.sha256").read_text().strip()
    assert heightfield_checksum(generate_terrain(42)) == expected


def test_height_interpolation():
    t = generate_terrain(42)
    # at sample points, interpolation returns the stored value
    assert t.height_at(10.0) == pytest.approx(t.heights[40])
    # midway between samples, the average
    mid = t.height_at(10.125)
    assert mid == pytest.approx((t.heights[40] + t.heights[41]) / 2)


def test_finish_beyond_length_rejected():
    with pytest.raises(ValueError):
        TerrainParams(length_m=50.0, finish_x=60.0)
