// Trace replay: a pure function of the server's samples. No client
// physics decides anything; verdicts come from the server.

import type { SimulationDoc, TraceSampleDoc } from "./types.js";

export interface ReplayFrame {
  t: number;
  x: number;
  y: number;
  angle: number;
  wheelSpeeds: number[];
  moving: boolean;
}

export function frameAt(samples: TraceSampleDoc[], t: number): ReplayFrame {
  if (samples.length === 0) throw new Error("empty trace");
  let s = samples[0];
  for (const candidate of samples) {
    if (candidate.t <= t) s = candidate;
    else break;
  }
  return {
    t: s.t,
    x: s.chassis_pose.x,
    y: s.chassis_pose.y,
    angle: s.chassis_pose.angle,
    wheelSpeeds: s.wheel_angular_speeds,
    moving: Math.abs(s.chassis_velocity.x) > 0.05,
  };
}

export function replayDuration(samples: TraceSampleDoc[]): number {
  return samples.length ? samples[samples.length - 1].t : 0;
}

/** Final replay position must agree with the served outcome. */
export function finalFrame(sim: SimulationDoc): ReplayFrame {
  return frameAt(sim.trace.samples, replayDuration(sim.trace.samples));
}
