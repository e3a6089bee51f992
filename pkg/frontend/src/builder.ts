// Vehicle builder state: drag any number of palette components around.

import type {
  BodyPartTypeName,
  Vec2,
  VehicleDoc,
  WheelTypeName,
} from "./types.js";

export const WHEEL_PALETTE: { type: WheelTypeName; label: string; radius: number }[] = [
  { type: "wooden_wagon_wheel", label: "Wooden wagon wheel", radius: 0.35 },
  { type: "rubber_car_tire", label: "Rubber car tire", radius: 0.3 },
  { type: "inflatable_inner_tube", label: "Inflatable inner tube", radius: 0.4 },
];

export const BODY_PALETTE: { type: BodyPartTypeName; label: string; size: Vec2 }[] = [
  { type: "cardboard_box", label: "Cardboard box", size: [0.6, 0.6] },
  { type: "skis", label: "Skis", size: [1.8, 0.1] },
  { type: "cinder_block", label: "Cinder block", size: [0.4, 0.2] },
  { type: "steel_pipe", label: "Steel pipe", size: [1.5, 0.15] },
];

interface PlacedWheel {
  type: WheelTypeName;
  anchor: Vec2;
}

interface PlacedPart {
  type: BodyPartTypeName;
  position: Vec2;
  rotation: number;
}

export class VehicleBuilder {
  wheels: PlacedWheel[] = [];
  parts: PlacedPart[] = [];

  constructor(public id: string) {}

  addWheel(type: WheelTypeName, anchor: Vec2): number {
    this.wheels.push({ type, anchor: [...anchor] as Vec2 });
    return this.wheels.length - 1;
  }

  addPart(type: BodyPartTypeName, position: Vec2, rotation = 0): number {
    this.parts.push({ type, position: [...position] as Vec2, rotation });
    return this.parts.length - 1;
  }

  moveWheel(index: number, anchor: Vec2): void {
    this.assertIndex(this.wheels, index);
    this.wheels[index].anchor = [...anchor] as Vec2;
  }

  movePart(index: number, position: Vec2): void {
    this.assertIndex(this.parts, index);
    this.parts[index].position = [...position] as Vec2;
  }

  rotatePart(index: number, rotation: number): void {
    this.assertIndex(this.parts, index);
    this.parts[index].rotation = rotation;
  }

  removeWheel(index: number): void {
    this.assertIndex(this.wheels, index);
    this.wheels.splice(index, 1);
  }

  removePart(index: number): void {
    this.assertIndex(this.parts, index);
    this.parts.splice(index, 1);
  }

  private assertIndex(list: unknown[], index: number): void {
    if (index < 0 || index >= list.length) {
      throw new Error(`no component at index ${index}`);
    }
  }

  export(): VehicleDoc {
    return {
      schema_version: 1,
      kind: "vehicle",
      id: this.id,
      wheels: this.wheels.map((w) => ({
        type: w.type,
        anchor: [...w.anchor] as Vec2,
      })),
      body_parts: this.parts.map((p) => ({
        type: p.type,
        position: [...p.position] as Vec2,
        rotation: p.rotation,
      })),
    };
  }
}
