"""Deterministic fixed-timestep 2D simulation of a vehicle crossing terrain.

The chassis is one rigid body; wheels are circles rigidly anchored to it
(they spin but do not translate relative to the chassis).  Wheel spin is
driven kinematically: angular velocity ramps up to a maximum, and traction
at each ground contact is limited by Coulomb friction.
"""

from __future__ import annotations

import hashlib
import json
import math
from collections import deque
from dataclasses import dataclass, field

from .content_model import Catalog, DEFAULT_CATALOG, VehicleSpec
from .terrain import Terrain


class SimError(RuntimeError):
    pass


@dataclass(frozen=True)
class SimConfig:
    timestep_s: float = 1.0 / 120.0
    gravity_mps2: float = 9.81
    wheel_angular_accel_radps2: float = 10.0
    wheel_max_angular_speed_radps: float = 20.0
    max_sim_time_s: float = 120.0
    stuck_window_s: float = 5.0
    stuck_progress_m: float = 0.05
    trace_rate_hz: float = 60.0

    def __post_init__(self):
        for name in ("timestep_s", "gravity_mps2", "wheel_angular_accel_radps2",
                     "wheel_max_angular_speed_radps", "max_sim_time_s",
                     "stuck_window_s", "stuck_progress_m", "trace_rate_hz"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        steps = 1.0 / (self.trace_rate_hz * self.timestep_s)
        if abs(steps - round(steps)) > 1e-9:
            raise ValueError("timestep must divide the trace interval")

    @property
    def steps_per_trace_sample(self) -> int:
        return round(1.0 / (self.trace_rate_hz * self.timestep_s))


@dataclass(frozen=True)
class TraceSample:
    t: float
    x: float
    y: float
    angle: float
    vx: float
    vy: float
    angular_velocity: float
    wheel_angular_speeds: tuple[float, ...]
    contacts: tuple[bool, ...]

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "chassis_pose": {"x": self.x, "y": self.y, "angle": self.angle},
            "chassis_velocity": {"x": self.vx, "y": self.vy,
                                 "angular": self.angular_velocity},
            "wheel_angular_speeds": list(self.wheel_angular_speeds),
            "contacts": list(self.contacts),
        }


@dataclass
class SimTrace:
    samples: list[TraceSample]
    # Per-run diagnostics used by invariants tests; not serialized.
    max_wheel_speed: float = 0.0
    max_traction_ratio: float = 0.0

    def to_dict(self) -> dict:
        return {"samples": [s.to_dict() for s in self.samples]}


@dataclass(frozen=True)
class SimOutcome:
    verdict: str  # "finished" | "stuck" | "timeout"
    t_s: float | None
    final_x: float

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "t_s": self.t_s, "final_x": self.final_x}


# Contact solver tuning; not part of the public config surface.
_SOLVER_ITERATIONS = 8
_BAUMGARTE = 0.2
_SLOP_M = 0.005
_RESTITUTION_THRESHOLD_MPS = 0.5


@dataclass
class _Body:
    mass: float
    inertia: float
    x: float
    y: float
    angle: float = 0.0
    vx: float = 0.0
    vy: float = 0.0
    w: float = 0.0

    def point_velocity(self, rx: float, ry: float) -> tuple[float, float]:
        return (self.vx - self.w * ry, self.vy + self.w * rx)

    def apply_impulse(self, jx: float, jy: float, rx: float, ry: float):
        self.vx += jx / self.mass
        self.vy += jy / self.mass
        self.w += (rx * jy - ry * jx) / self.inertia


@dataclass
class _Contact:
    rx: float  # contact point offset from center of mass (world frame)
    ry: float
    nx: float
    ny: float
    friction: float
    restitution: float
    v_n0: float
    target_vt: float  # surface speed a driven wheel wants at the patch
    bias: float
    jn: float = 0.0
    jt: float = 0.0
    wheel_index: int | None = None


def _build_components(vehicle: VehicleSpec, catalog: Catalog):
    """Flatten the vehicle into (mass, local offset, shape) records."""
    wheels = []
    parts = []
    for w in vehicle.wheels:
        props = catalog.wheels[w.type]
        wheels.append((props, w.anchor.x, w.anchor.y))
    for p in vehicle.body_parts:
        props = catalog.body_parts[p.type]
        parts.append((props, p.position.x, p.position.y, p.rotation))
    return wheels, parts


def simulate(vehicle: VehicleSpec, terrain: Terrain,
             config: SimConfig = SimConfig(),
             catalog: Catalog = DEFAULT_CATALOG) -> tuple[SimTrace, SimOutcome]:
    """Run the test phase; returns the sampled trace and the verdict."""
    wheels, parts = _build_components(vehicle, catalog)
    if not wheels and not parts:
        raise SimError("cannot simulate an empty vehicle (zero mass)")

    # Center of mass and moment of inertia in the vehicle frame.
    total_mass = sum(p.mass_kg for p, *_ in wheels) + sum(p.mass_kg for p, *_ in parts)
    com_x = (sum(p.mass_kg * x for p, x, _ in wheels)
             + sum(p.mass_kg * x for p, x, _, _ in parts)) / total_mass
    com_y = (sum(p.mass_kg * y for p, _, y in wheels)
             + sum(p.mass_kg * y for p, _, y, _ in parts)) / total_mass

    inertia = 0.0
    wheel_offsets = []
    for props, x, y in wheels:
        dx, dy = x - com_x, y - com_y
        inertia += props.mass_kg * (dx * dx + dy * dy + 0.5 * props.radius_m ** 2)
        wheel_offsets.append((props, dx, dy))
    part_corners = []
    for props, x, y, rot in parts:
        dx, dy = x - com_x, y - com_y
        hw, hh = props.size_m[0] / 2, props.size_m[1] / 2
        inertia += props.mass_kg * (dx * dx + dy * dy + (hw * hw + hh * hh) / 3)
        cr, sr = math.cos(rot), math.sin(rot)
        for cx, cy in ((-hw, -hh), (hw, -hh), (hw, hh), (-hw, hh)):
            part_corners.append((props, dx + cx * cr - cy * sr, dy + cx * sr + cy * cr))
    inertia = max(inertia, 0.05 * total_mass)

    # Place the vehicle on the starting pad: leftmost extent at x = 0.1 m,
    # lowest point resting on the surface.
    min_x = min([dx - p.radius_m for p, dx, _ in wheel_offsets] or [0.0])
    min_x = min([min_x] + [cx for _, cx, _ in part_corners])
    min_y = min([dy - p.radius_m for p, _, dy in wheel_offsets] or [0.0])
    min_y = min([min_y] + [cy for _, _, cy in part_corners])
    start_x = 0.1 - min_x
    start_y = terrain.height_at(start_x) - min_y + 1e-4

    body = _Body(mass=total_mass, inertia=inertia, x=start_x, y=start_y)
    wheel_speeds = [0.0] * len(wheel_offsets)

    dt = config.timestep_s
    n_steps = int(round(config.max_sim_time_s / dt))
    window_steps = int(round(config.stuck_window_s / dt))
    x_history: deque[float] = deque(maxlen=window_steps + 1)
    x_history.append(body.x)

    trace = SimTrace(samples=[])
    sample_every = config.steps_per_trace_sample

    def rotate(dx, dy):
        c, s = math.cos(body.angle), math.sin(body.angle)
        return (dx * c - dy * s, dx * s + dy * c)

    def record(t: float, contacts: tuple[bool, ...]):
        trace.samples.append(TraceSample(
            t=t, x=body.x, y=body.y, angle=body.angle,
            vx=body.vx, vy=body.vy, angular_velocity=body.w,
            wheel_angular_speeds=tuple(wheel_speeds),
            contacts=contacts,
        ))

    record(0.0, tuple(False for _ in wheel_offsets))
    outcome = None

    for step in range(1, n_steps + 1):
        t = step * dt

        # Drive the wheels.
        for i in range(len(wheel_speeds)):
            wheel_speeds[i] = min(
                wheel_speeds[i] + config.wheel_angular_accel_radps2 * dt,
                config.wheel_max_angular_speed_radps)
            trace.max_wheel_speed = max(trace.max_wheel_speed, wheel_speeds[i])

        body.vy -= config.gravity_mps2 * dt

        # Collect contacts.
        contacts: list[_Contact] = []
        wheel_contact_flags = [False] * len(wheel_offsets)
        for i, (props, dx, dy) in enumerate(wheel_offsets):
            ox, oy = rotate(dx, dy)
            cx, cy = body.x + ox, body.y + oy
            h = terrain.height_at(cx)
            slope = terrain.slope_at(cx)
            inv_len = 1.0 / math.hypot(1.0, slope)
            nx, ny = -slope * inv_len, inv_len
            dist = (cy - h) * ny
            pen = props.radius_m - dist
            if pen <= 0:
                continue
            wheel_contact_flags[i] = True
            rx, ry = ox - nx * props.radius_m, oy - ny * props.radius_m
            vpx, vpy = body.point_velocity(rx, ry)
            v_n = vpx * nx + vpy * ny
            contacts.append(_Contact(
                rx=rx, ry=ry, nx=nx, ny=ny,
                friction=props.friction, restitution=props.restitution,
                v_n0=v_n,
                target_vt=wheel_speeds[i] * props.radius_m,
                bias=_BAUMGARTE * max(pen - _SLOP_M, 0.0) / dt,
                wheel_index=i,
            ))
        for props, cxo, cyo in part_corners:
            ox, oy = rotate(cxo, cyo)
            px, py = body.x + ox, body.y + oy
            h = terrain.height_at(px)
            pen = h - py
            if pen <= 0:
                continue
            slope = terrain.slope_at(px)
            inv_len = 1.0 / math.hypot(1.0, slope)
            nx, ny = -slope * inv_len, inv_len
            vpx, vpy = body.point_velocity(ox, oy)
            contacts.append(_Contact(
                rx=ox, ry=oy, nx=nx, ny=ny,
                friction=props.friction, restitution=0.0,
                v_n0=vpx * nx + vpy * ny,
                target_vt=0.0,
                bias=_BAUMGARTE * max(pen - _SLOP_M, 0.0) / dt,
            ))

        # Sequential impulses with accumulated clamping.
        for _ in range(_SOLVER_ITERATIONS):
            for c in contacts:
                vpx, vpy = body.point_velocity(c.rx, c.ry)
                v_n = vpx * c.nx + vpy * c.ny
                rn = c.rx * c.ny - c.ry * c.nx
                k_n = 1.0 / body.mass + rn * rn / body.inertia
                restit = 0.0
                if c.v_n0 < -_RESTITUTION_THRESHOLD_MPS:
                    restit = -c.restitution * c.v_n0
                target_vn = max(c.bias, restit)
                dj = (target_vn - v_n) / k_n
                new_jn = max(c.jn + dj, 0.0)
                dj = new_jn - c.jn
                c.jn = new_jn
                body.apply_impulse(dj * c.nx, dj * c.ny, c.rx, c.ry)

                tx, ty = c.ny, -c.nx  # tangent pointing toward +x
                vpx, vpy = body.point_velocity(c.rx, c.ry)
                v_t = vpx * tx + vpy * ty
                rt = c.rx * ty - c.ry * tx
                k_t = 1.0 / body.mass + rt * rt / body.inertia
                dj = (c.target_vt - v_t) / k_t
                max_jt = c.friction * c.jn
                new_jt = min(max(c.jt + dj, -max_jt), max_jt)
                dj = new_jt - c.jt
                c.jt = new_jt
                body.apply_impulse(dj * tx, dj * ty, c.rx, c.ry)

        for c in contacts:
            if c.wheel_index is not None and c.jn > 0:
                trace.max_traction_ratio = max(
                    trace.max_traction_ratio, abs(c.jt) / (c.friction * c.jn + 1e-12))

        body.x += body.vx * dt
        body.y += body.vy * dt
        body.angle += body.w * dt

        if not all(math.isfinite(v) for v in
                   (body.x, body.y, body.angle, body.vx, body.vy, body.w)):
            raise SimError(f"non-finite state at step {step} (t={t:.4f}s)")

        if step % sample_every == 0:
            record(round(t, 9), tuple(wheel_contact_flags))

        x_history.append(body.x)
        if body.x >= terrain.finish_x:
            outcome = SimOutcome("finished", round(t, 9), body.x)
            break
        if len(x_history) == window_steps + 1:
            if body.x - x_history[0] < config.stuck_progress_m:
                outcome = SimOutcome("stuck", round(t, 9), body.x)
                break

    if outcome is None:
        outcome = SimOutcome("timeout", None, body.x)
    return trace, outcome


def trace_checksum(trace: SimTrace) -> str:
    """SHA-256 over quantized samples so equality is platform-stable."""
    def q(v: float) -> float:
        return round(v, 6)

    canonical = [
        [q(s.t), q(s.x), q(s.y), q(s.angle), q(s.vx), q(s.vy),
         q(s.angular_velocity),
         [q(w) for w in s.wheel_angular_speeds],
         [int(c) for c in s.contacts]]
        for s in trace.samples
    ]
    blob = json.dumps(canonical, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()
