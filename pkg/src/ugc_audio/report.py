"""Render simulation run reports: delimited trace samples plus figures."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .sim import SimOutcome, SimTrace
from .terrain import SAMPLE_INTERVAL_M, Terrain


def write_trace_csv(trace: SimTrace, path: Path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        n_wheels = len(trace.samples[0].wheel_angular_speeds) if trace.samples else 0
        header = ["t", "x", "y", "angle", "vx", "vy", "angular_velocity"]
        header += [f"wheel_{i}_radps" for i in range(n_wheels)]
        header += [f"wheel_{i}_contact" for i in range(n_wheels)]
        writer.writerow(header)
        for s in trace.samples:
            row = [s.t, s.x, s.y, s.angle, s.vx, s.vy, s.angular_velocity]
            row += list(s.wheel_angular_speeds)
            row += [int(c) for c in s.contacts]
            writer.writerow(row)


def render_run_report(trace: SimTrace, outcome: SimOutcome, terrain: Terrain,
                      out_dir: str | Path) -> list[Path]:
    """Write trace.csv and PNG figures into out_dir; returns written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    csv_path = out / "trace.csv"
    write_trace_csv(trace, csv_path)
    written.append(csv_path)

    t = [s.t for s in trace.samples]
    x = [s.x for s in trace.samples]
    y = [s.y for s in trace.samples]
    vx = [s.vx for s in trace.samples]

    fig, ax = plt.subplots(figsize=(10, 4))
    tx = np.arange(len(terrain.heights)) * SAMPLE_INTERVAL_M
    ax.fill_between(tx, terrain.heights, terrain.heights.min() - 1,
                    color="#c8b79a", zorder=1)
    ax.plot(x, y, color="#1f77b4", lw=1.5, zorder=2, label="chassis path")
    ax.axvline(terrain.finish_x, color="green", ls="--", label="finish")
    ax.set_xlabel("x [m]")
    ax.set_ylabel("y [m]")
    ax.set_title(f"course profile — verdict: {outcome.verdict}"
                 f" (final_x={outcome.final_x:.2f} m)")
    ax.legend(loc="upper left")
    path = out / "course.png"
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    written.append(path)

    fig, axes = plt.subplots(2, 1, figsize=(10, 6), sharex=True)
    axes[0].plot(t, vx, color="#d62728")
    axes[0].set_ylabel("vx [m/s]")
    axes[0].set_title("horizontal speed")
    for i in range(len(trace.samples[0].wheel_angular_speeds) if trace.samples else 0):
        axes[1].plot(t, [s.wheel_angular_speeds[i] for s in trace.samples],
                     label=f"wheel {i}")
    axes[1].set_ylabel("wheel speed [rad/s]")
    axes[1].set_xlabel("t [s]")
    if trace.samples and trace.samples[0].wheel_angular_speeds:
        axes[1].legend()
    path = out / "speeds.png"
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    written.append(path)

    return written
