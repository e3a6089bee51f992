// Mirrors docs/schemas/*.schema.json — the wire contract with the server.

export type Rgb = [number, number, number];
export type Vec2 = [number, number];

export interface PlatformDoc {
  position: Vec2;
  size: Vec2;
  color: Rgb;
}

export interface LevelDoc {
  schema_version: 1;
  kind: "level";
  id: string;
  gradient: Rgb[];
  platforms: PlatformDoc[];
  goal: Vec2;
  bounds: Vec2;
}

export type WheelTypeName =
  | "wooden_wagon_wheel"
  | "rubber_car_tire"
  | "inflatable_inner_tube";

export type BodyPartTypeName =
  | "cardboard_box"
  | "skis"
  | "cinder_block"
  | "steel_pipe";

export interface WheelDoc {
  type: WheelTypeName;
  anchor: Vec2;
}

export interface BodyPartDoc {
  type: BodyPartTypeName;
  position: Vec2;
  rotation: number;
}

export interface VehicleDoc {
  schema_version: 1;
  kind: "vehicle";
  id: string;
  wheels: WheelDoc[];
  body_parts: BodyPartDoc[];
}

export interface PromptSpecDoc {
  text: string;
  kind: "music" | "sfx";
  duration_s: number;
  sample_rate_hz: number;
  source: "programmatic" | "caption";
  melody_ref: string | null;
}

export interface JobDoc {
  id: string;
  prompt: PromptSpecDoc;
  status: "pending" | "running" | "done" | "failed";
  failure_reason: string | null;
  asset_id: string | null;
}

export interface TraceSampleDoc {
  t: number;
  chassis_pose: { x: number; y: number; angle: number };
  chassis_velocity: { x: number; y: number; angular: number };
  wheel_angular_speeds: number[];
  contacts: boolean[];
}

export interface SimOutcomeDoc {
  verdict: "finished" | "stuck" | "timeout";
  t_s: number | null;
  final_x: number;
}

export interface SimulationDoc {
  outcome: SimOutcomeDoc;
  trace: { samples: TraceSampleDoc[] };
}
