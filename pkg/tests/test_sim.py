import math
from pathlib import Path

import pytest

from ugc_audio.content_model import DEFAULT_CATALOG, WheelType
from ugc_audio.fixtures import REFERENCE_TERRAIN_SEED, load_vehicle
from ugc_audio.sim import SimConfig, SimError, SimTrace, simulate, trace_checksum
from ugc_audio.terrain import TerrainParams, generate_terrain

GOLDEN = Path(__file__).parent / "golden"

FLAT = generate_terrain(0, TerrainParams(amplitude_m=0.0))
REFERENCE = generate_terrain(REFERENCE_TERRAIN_SEED)


def test_config_rejects_bad_timestep():
    with pytest.raises(ValueError):
        SimConfig(timestep_s=1.0 / 100.0, trace_rate_hz=60.0)
    with pytest.raises(ValueError):
        SimConfig(gravity_mps2=-1.0)


def test_empty_vehicle_rejected():
    from ugc_audio.content_model import VehicleSpec
    with pytest.raises(SimError):
        simulate(VehicleSpec(id="e", wheels=(), body_parts=()), FLAT)


def test_no_wheel_vehicle_stuck():
    trace, outcome = simulate(load_vehicle("no_wheel"), FLAT)
    cfg = SimConfig()
    assert outcome.verdict == "stuck"
    # stuck fires as soon as the trailing window fills
    assert outcome.t_s == pytest.approx(cfg.stuck_window_s,
                                        abs=1.0 / cfg.trace_rate_hz)
    assert outcome.final_x < 0.5


def test_no_wheel_vehicle_stuck_on_rough_terrain():
    _, outcome = simulate(load_vehicle("no_wheel"), REFERENCE)
    assert outcome.verdict == "stuck"


@pytest.mark.parametrize("fixture,wheel_type", [
    ("wooden_light", WheelType.WOODEN_WAGON_WHEEL),
    ("rubber_pair", WheelType.RUBBER_CAR_TIRE),
    ("tube_pair", WheelType.INFLATABLE_INNER_TUBE),
])
def test_steady_speed_matches_rolling_analytic(fixture, wheel_type):
    # rolling without slipping: v = omega_max * r
    cfg = SimConfig()
    trace, outcome = simulate(load_vehicle(fixture), FLAT, cfg)
    assert outcome.verdict == "finished"
    expected = cfg.wheel_max_angular_speed_radps * \
        DEFAULT_CATALOG.wheels[wheel_type].radius_m
    tail = [s.vx for s in trace.samples[-int(2 * cfg.trace_rate_hz):]]
    steady = sum(tail) / len(tail)
    assert steady == pytest.approx(expected, rel=0.05)


def test_determinism():
    v = load_vehicle("wooden_light")
    t1, o1 = simulate(v, REFERENCE)
    t2, o2 = simulate(v, REFERENCE)
    assert trace_checksum(t1) == trace_checksum(t2)
    assert o1 == o2


def test_golden_trace_checksum():
    expected = (GOLDEN / "trace_wooden_light_seed42.sha256").read_text().strip()
    trace, _ = simulate(load_vehicle("wooden_light"), REFERENCE)
    assert trace_checksum(trace) == expected


def test_wheel_speed_never_exceeds_max():
    cfg = SimConfig()
    trace, _ = simulate(load_vehicle("wooden_light"), REFERENCE, cfg)
    assert trace.max_wheel_speed <= cfg.wheel_max_angular_speed_radps + 1e-12
    for s in trace.samples:
        assert all(w <= cfg.wheel_max_angular_speed_radps + 1e-12
                   for w in s.wheel_angular_speeds)


def test_traction_never_exceeds_coulomb_limit():
    trace, _ = simulate(load_vehicle("wooden_light"), REFERENCE)
    assert trace.max_traction_ratio <= 1.0 + 1e-9


def test_motor_off_horizontal_energy_non_increasing():
    cfg = SimConfig(wheel_angular_accel_radps2=1e-12,
                    wheel_max_angular_speed_radps=1e-12, max_sim_time_s=10.0)
    trace, outcome = simulate(load_vehicle("wooden_light"), FLAT, cfg)
    # after the body settles, horizontal KE must only dissipate
    settled = [s for s in trace.samples if s.t >= 1.0]
    energies = [s.vx * s.vx for s in settled]
    for a, b in zip(energies, energies[1:]):
        assert b <= a + 1e-9


def test_trace_sampling_contract():
    cfg = SimConfig()
    trace, _ = simulate(load_vehicle("no_wheel"), FLAT, cfg)
    assert trace.samples[0].t == 0.0
    dt = 1.0 / cfg.trace_rate_hz
    for a, b in zip(trace.samples, trace.samples[1:]):
        assert b.t - a.t == pytest.approx(dt, abs=1e-9)
    assert all(math.isfinite(s.x) and math.isfinite(s.y) for s in trace.samples)


def test_trace_checksum_empty_and_equal():
    empty = SimTrace(samples=[])
    assert trace_checksum(empty) == trace_checksum(SimTrace(samples=[]))
    t1, _ = simulate(load_vehicle("no_wheel"), FLAT)
    t2, _ = simulate(load_vehicle("no_wheel"), FLAT)
    assert trace_checksum(t1) == trace_checksum(t2)


def test_trace_serializes_to_json_dict():
    trace, outcome = simulate(load_vehicle("no_wheel"), FLAT)
    data = trace.to_dict()
    sample = data["samples"][0]
    assert set(sample) == {"t", "chassis_pose", "chassis_velocity",
                           "wheel_angular_speeds", "contacts"}
    assert outcome.to_dict()["verdict"] == "stuck"
