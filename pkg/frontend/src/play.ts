// Client-side platformer play mode. Purely cosmetic: nothing the server
// decides depends on this physics.

import type { LevelDoc } from "./types.js";

const GRAVITY = 22; // m/s^2, tuned for snappy jumps
const MOVE_SPEED = 6;
const JUMP_SPEED = 10;

export interface PlayerState {
  x: number;
  y: number;
  vx: number;
  vy: number;
  grounded: boolean;
  reachedGoal: boolean;
}

export interface PlayInput {
  left: boolean;
  right: boolean;
  jump: boolean;
}

export function spawnPlayer(level: LevelDoc): PlayerState {
  const first = level.platforms[0];
  return {
    x: first.position[0] + first.size[0] / 2,
    y: first.position[1] + first.size[1] + 0.01,
    vx: 0,
    vy: 0,
    grounded: true,
    reachedGoal: false,
  };
}

export function stepPlayer(
  state: PlayerState,
  input: PlayInput,
  level: LevelDoc,
  dt: number
): PlayerState {
  const next = { ...state };
  next.vx = (input.right ? MOVE_SPEED : 0) - (input.left ? MOVE_SPEED : 0);
  if (input.jump && state.grounded) next.vy = JUMP_SPEED;
  next.vy -= GRAVITY * dt;

  next.x = Math.min(Math.max(state.x + next.vx * dt, 0), level.bounds[0]);
  next.y = state.y + next.vy * dt;
  next.grounded = false;

  // land on platform tops only, when falling
  if (next.vy <= 0) {
    for (const p of level.platforms) {
      const top = p.position[1] + p.size[1];
      const withinX =
        next.x >= p.position[0] && next.x <= p.position[0] + p.size[0];
      if (withinX && state.y >= top && next.y <= top) {
        next.y = top;
        next.vy = 0;
        next.grounded = true;
      }
    }
  }
  if (next.y < 0) {
    next.y = 0;
    next.vy = 0;
    next.grounded = true;
  }

  const dx = next.x - level.goal[0];
  const dy = next.y - level.goal[1];
  if (Math.hypot(dx, dy) < 0.6) next.reachedGoal = true;
  return next;
}
