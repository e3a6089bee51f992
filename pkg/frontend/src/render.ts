// Canvas drawing helpers shared by the editor, play mode, and replay.

import type { LevelDoc, Rgb, VehicleDoc } from "./types.js";
import { BODY_PALETTE, WHEEL_PALETTE } from "./builder.js";

export const CAPTURE_WIDTH = 800;
export const CAPTURE_HEIGHT = 450;

export function cssColor(c: Rgb): string {
  return `rgb(${c[0]},${c[1]},${c[2]})`;
}

export function drawLevel(
  ctx: CanvasRenderingContext2D,
  level: LevelDoc,
  width: number,
  height: number
): void {
  const grad = ctx.createLinearGradient(0, 0, 0, height);
  const n = level.gradient.length;
  level.gradient.forEach((c, i) => {
    grad.addColorStop(n === 1 ? 0 : i / (n - 1), cssColor(c));
  });
  ctx.fillStyle = grad;
  ctx.fillRect(0, 0, width, height);

  const sx = width / level.bounds[0];
  const sy = height / level.bounds[1];
  for (const p of level.platforms) {
    ctx.fillStyle = cssColor(p.color);
    ctx.fillRect(
      p.position[0] * sx,
      height - (p.position[1] + p.size[1]) * sy,
      p.size[0] * sx,
      p.size[1] * sy
    );
  }

  // the goal star
  ctx.fillStyle = "#ffd700";
  ctx.beginPath();
  const gx = level.goal[0] * sx;
  const gy = height - level.goal[1] * sy;
  for (let i = 0; i < 10; i++) {
    const r = i % 2 === 0 ? 12 : 5;
    const a = (Math.PI / 5) * i - Math.PI / 2;
    ctx.lineTo(gx + r * Math.cos(a), gy + r * Math.sin(a));
  }
  ctx.closePath();
  ctx.fill();
}

export function drawVehicle(
  ctx: CanvasRenderingContext2D,
  vehicle: VehicleDoc,
  originX: number,
  originY: number,
  scale: number,
  angle = 0
): void {
  ctx.save();
  ctx.translate(originX, originY);
  ctx.rotate(-angle);

  for (const part of vehicle.body_parts) {
    const info = BODY_PALETTE.find((b) => b.type === part.type)!;
    ctx.save();
    ctx.translate(part.position[0] * scale, -part.position[1] * scale);
    ctx.rotate(-part.rotation);
    ctx.fillStyle = "#8d6e63";
    ctx.fillRect(
      (-info.size[0] / 2) * scale,
      (-info.size[1] / 2) * scale,
      info.size[0] * scale,
      info.size[1] * scale
    );
    ctx.restore();
  }

  for (const wheel of vehicle.wheels) {
    const info = WHEEL_PALETTE.find((w) => w.type === wheel.type)!;
    ctx.beginPath();
    ctx.arc(
      wheel.anchor[0] * scale,
      -wheel.anchor[1] * scale,
      info.radius * scale,
      0,
      Math.PI * 2
    );
    ctx.fillStyle = "#37474f";
    ctx.fill();
    ctx.strokeStyle = "#eceff1";
    ctx.stroke();
  }
  ctx.restore();
}

/** Rasterize at the fixed caption resolution so captions stay stable. */
export function captureLevelPng(level: LevelDoc): Promise<Blob> {
  const canvas = document.createElement("canvas");
  canvas.width = CAPTURE_WIDTH;
  canvas.height = CAPTURE_HEIGHT;
  const ctx = canvas.getContext("2d")!;
  drawLevel(ctx, level, CAPTURE_WIDTH, CAPTURE_HEIGHT);
  return canvasToPng(canvas);
}

export function captureVehiclePng(vehicle: VehicleDoc): Promise<Blob> {
  const canvas = document.createElement("canvas");
  canvas.width = CAPTURE_WIDTH;
  canvas.height = CAPTURE_HEIGHT;
  const ctx = canvas.getContext("2d")!;
  ctx.fillStyle = "#cfe8ff";
  ctx.fillRect(0, 0, CAPTURE_WIDTH, CAPTURE_HEIGHT);
  drawVehicle(ctx, vehicle, CAPTURE_WIDTH / 2, CAPTURE_HEIGHT * 0.6, 120);
  return canvasToPng(canvas);
}

function canvasToPng(canvas: HTMLCanvasElement): Promise<Blob> {
  return new Promise((resolve, reject) => {
    canvas.toBlob((blob) => {
      if (blob) resolve(blob);
      else reject(new Error("PNG capture failed"));
    }, "image/png");
  });
}
