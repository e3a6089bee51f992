// Level editor state: pure document manipulation, no canvas concerns.
// Every export must satisfy the published level schema.

import type { LevelDoc, PlatformDoc, Rgb, Vec2 } from "./types.js";

const DEFAULT_BOUNDS: Vec2 = [32, 18];

export class LevelEditor {
  gradient: Rgb[];
  platforms: PlatformDoc[] = [];
  goal: Vec2;
  bounds: Vec2;

  constructor(public id: string, bounds: Vec2 = DEFAULT_BOUNDS) {
    this.bounds = [...bounds] as Vec2;
    this.gradient = [
      [80, 160, 255],
      [220, 240, 255],
    ];
    this.goal = [bounds[0] - 2, bounds[1] / 2];
  }

  private clampPoint(p: Vec2): Vec2 {
    return [
      Math.min(Math.max(p[0], 0), this.bounds[0]),
      Math.min(Math.max(p[1], 0), this.bounds[1]),
    ];
  }

  setGradientStop(index: number, color: Rgb): void {
    if (index < 0 || index > this.gradient.length) {
      throw new Error(`gradient stop ${index} out of range`);
    }
    if (index === this.gradient.length) this.gradient.push(color);
    else this.gradient[index] = color;
  }

  removeGradientStop(index: number): void {
    if (this.gradient.length <= 2) {
      throw new Error("a gradient needs at least two stops");
    }
    this.gradient.splice(index, 1);
  }

  addPlatform(position: Vec2, size: Vec2, color: Rgb): number {
    const platform = this.fitted({ position, size, color });
    this.platforms.push(platform);
    return this.platforms.length - 1;
  }

  movePlatform(index: number, position: Vec2): void {
    const p = this.platform(index);
    this.platforms[index] = this.fitted({ ...p, position });
  }

  resizePlatform(index: number, size: Vec2): void {
    const p = this.platform(index);
    this.platforms[index] = this.fitted({ ...p, size });
  }

  recolorPlatform(index: number, color: Rgb): void {
    this.platforms[index] = { ...this.platform(index), color };
  }

  removePlatform(index: number): void {
    this.platform(index);
    this.platforms.splice(index, 1);
  }

  placeGoal(position: Vec2): void {
    this.goal = this.clampPoint(position);
  }

  private platform(index: number): PlatformDoc {
    const p = this.platforms[index];
    if (!p) throw new Error(`no platform at index ${index}`);
    return p;
  }

  /** Clamp a platform fully inside the level bounds. */
  private fitted(p: PlatformDoc): PlatformDoc {
    const w = Math.min(Math.max(p.size[0], 0.25), this.bounds[0]);
    const h = Math.min(Math.max(p.size[1], 0.25), this.bounds[1]);
    const x = Math.min(Math.max(p.position[0], 0), this.bounds[0] - w);
    const y = Math.min(Math.max(p.position[1], 0), this.bounds[1] - h);
    return { position: [x, y], size: [w, h], color: p.color };
  }

  export(): LevelDoc {
    if (this.platforms.length === 0) {
      throw new Error("add at least one platform before saving");
    }
    return {
      schema_version: 1,
      kind: "level",
      id: this.id,
      gradient: this.gradient.map((c) => [...c] as Rgb),
      platforms: this.platforms.map((p) => ({
        position: [...p.position] as Vec2,
        size: [...p.size] as Vec2,
        color: [...p.color] as Rgb,
      })),
      goal: [...this.goal] as Vec2,
      bounds: [...this.bounds] as Vec2,
    };
  }
}
