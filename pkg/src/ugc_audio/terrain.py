"""Seeded procedural terrain heightfields for the vehicle test course."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SAMPLE_INTERVAL_M = 0.25


@dataclass(frozen=True)
class TerrainParams:
    length_m: float = 100.0
    amplitude_m: float = 0.8
    bump_amplitude_m: float | None = None  # None -> 15% of amplitude_m
    start_pad_m: float = 5.0
    ramp_m: float = 3.0
    finish_x: float = 95.0

    def __post_init__(self):
        if self.length_m <= 0:
            raise ValueError("length must be positive")
        if self.finish_x > self.length_m:
            raise ValueError("finish line beyond course length")


@dataclass(frozen=True)
class Terrain:
    seed: int
    length_m: float
    finish_x: float
    heights: np.ndarray  # sampled every SAMPLE_INTERVAL_M, heights[0] at x=0

    def height_at(self, x: float) -> float:
        """Linear interpolation; flat extrapolation outside the course."""
        pos = x / SAMPLE_INTERVAL_M
        i = int(np.floor(pos))
        if i < 0:
            return float(self.heights[0])
        if i >= len(self.heights) - 1:
            return float(self.heights[-1])
        frac = pos - i
        return float(self.heights[i] * (1 - frac) + self.heights[i + 1] * frac)

    def slope_at(self, x: float) -> float:
        """dh/dx of the interpolated surface."""
        pos = x / SAMPLE_INTERVAL_M
        i = int(np.floor(pos))
        if i < 0 or i >= len(self.heights) - 1:
            return 0.0
        return float(self.heights[i + 1] - self.heights[i]) / SAMPLE_INTERVAL_M


def generate_terrain(seed: int, params: TerrainParams = TerrainParams()) -> Terrain:
    """Deterministic heightfield: 4-8 seeded sinusoids plus smoothed bump noise.

    The first start_pad_m meters are flat at height 0, followed by a ramp
    that blends in the rough profile.
    """
    rng = np.random.default_rng(seed)
    n_samples = int(round(params.length_m / SAMPLE_INTERVAL_M)) + 1
    x = np.arange(n_samples) * SAMPLE_INTERVAL_M

    n_waves = int(rng.integers(4, 9))
    amps = rng.uniform(0.3, 1.0, n_waves)
    wavelengths = rng.uniform(8.0, 40.0, n_waves)
    phases = rng.uniform(0.0, 2 * np.pi, n_waves)
    rough = np.zeros(n_samples)
    for a, lam, phi in zip(amps, wavelengths, phases):
        rough += a * np.sin(2 * np.pi * x / lam + phi)
    peak = np.max(np.abs(rough))
    if peak > 0:
        rough = rough / peak * params.amplitude_m

    bump_amp = params.bump_amplitude_m
    if bump_amp is None:
        bump_amp = 0.15 * params.amplitude_m
    bumps = rng.uniform(-1.0, 1.0, n_samples) * bump_amp
    kernel = np.array([0.25, 0.5, 0.25])
    bumps = np.convolve(bumps, kernel, mode="same")

    # Flat starting pad, then a linear ramp into the rough profile.
    weight = np.clip((x - params.start_pad_m) / params.ramp_m, 0.0, 1.0)
    heights = (rough + bumps) * weight

    return Terrain(seed=seed, length_m=params.length_m,
                   finish_x=params.finish_x, heights=heights)
