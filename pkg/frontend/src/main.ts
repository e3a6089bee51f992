// Single-page app: level editor + play mode, vehicle builder + replay,
// prompt panel, caption capture.

import { ApiClient } from "./api.js";
import { BODY_PALETTE, VehicleBuilder, WHEEL_PALETTE } from "./builder.js";
import { LevelEditor } from "./editor.js";
import { PlayerState, spawnPlayer, stepPlayer } from "./play.js";
import { PromptPanel } from "./prompt_panel.js";
import { frameAt, replayDuration } from "./replay.js";
import {
  captureLevelPng,
  captureVehiclePng,
  drawLevel,
  drawVehicle,
} from "./render.js";
import type { Rgb, SimulationDoc } from "./types.js";

const api = new ApiClient();

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function toast(message: string): void {
  const box = $("toasts");
  const el = document.createElement("div");
  el.className = "toast";
  el.textContent = message;
  box.appendChild(el);
  setTimeout(() => el.remove(), 4000);
}

function hexToRgb(hex: string): Rgb {
  return [
    parseInt(hex.slice(1, 3), 16),
    parseInt(hex.slice(3, 5), 16),
    parseInt(hex.slice(5, 7), 16),
  ];
}

// --- tabs ----------------------------------------------------------------

for (const button of document.querySelectorAll<HTMLButtonElement>("[data-tab]")) {
  button.addEventListener("click", () => {
    for (const panel of document.querySelectorAll<HTMLElement>(".tab-panel")) {
      panel.hidden = panel.id !== button.dataset.tab;
    }
    for (const other of document.querySelectorAll("[data-tab]")) {
      other.classList.toggle("active", other === button);
    }
  });
}

// --- level editor --------------------------------------------------------

const editor = new LevelEditor("my-level");
editor.addPlatform([2, 2], [6, 1], [90, 180, 90]);
const levelCanvas = $("level-canvas") as HTMLCanvasElement;
const levelCtx = levelCanvas.getContext("2d")!;
let player: PlayerState | null = null;
let selectedPlatform = -1;
const keys = { left: false, right: false, jump: false };

function currentLevelDoc() {
  const doc = editor.export();
  doc.id = ($("level-id") as HTMLInputElement).value || "my-level";
  return doc;
}

function redrawLevel(): void {
  const doc = editor.export();
  drawLevel(levelCtx, doc, levelCanvas.width, levelCanvas.height);
  if (selectedPlatform >= 0 && selectedPlatform < editor.platforms.length) {
    const p = editor.platforms[selectedPlatform];
    const sx = levelCanvas.width / editor.bounds[0];
    const sy = levelCanvas.height / editor.bounds[1];
    levelCtx.strokeStyle = "#ff4081";
    levelCtx.lineWidth = 2;
    levelCtx.strokeRect(
      p.position[0] * sx,
      levelCanvas.height - (p.position[1] + p.size[1]) * sy,
      p.size[0] * sx,
      p.size[1] * sy
    );
  }
  if (player) {
    const sx = levelCanvas.width / editor.bounds[0];
    const sy = levelCanvas.height / editor.bounds[1];
    levelCtx.fillStyle = player.reachedGoal ? "#ffd700" : "#e53935";
    levelCtx.fillRect(
      player.x * sx - 8,
      levelCanvas.height - (player.y + 0.8) * sy,
      16,
      0.8 * sy
    );
  }
}

function canvasToWorld(e: MouseEvent): [number, number] {
  const rect = levelCanvas.getBoundingClientRect();
  const x = ((e.clientX - rect.left) / rect.width) * editor.bounds[0];
  const y =
    (1 - (e.clientY - rect.top) / rect.height) * editor.bounds[1];
  return [x, y];
}

let dragging = false;
levelCanvas.addEventListener("mousedown", (e) => {
  const [x, y] = canvasToWorld(e);
  const mode = (
    document.querySelector<HTMLInputElement>('input[name="tool"]:checked')
  )?.value;
  if (mode === "platform") {
    selectedPlatform = editor.addPlatform(
      [x - 2, y - 0.5],
      [4, 1],
      hexToRgb(($("platform-color") as HTMLInputElement).value)
    );
    dragging = true;
  } else if (mode === "goal") {
    editor.placeGoal([x, y]);
  } else {
    selectedPlatform = editor.platforms.findIndex(
      (p) =>
        x >= p.position[0] &&
        x <= p.position[0] + p.size[0] &&
        y >= p.position[1] &&
        y <= p.position[1] + p.size[1]
    );
    dragging = selectedPlatform >= 0;
  }
  redrawLevel();
});
levelCanvas.addEventListener("mousemove", (e) => {
  if (!dragging || selectedPlatform < 0) return;
  const [x, y] = canvasToWorld(e);
  const p = editor.platforms[selectedPlatform];
  editor.movePlatform(selectedPlatform, [x - p.size[0] / 2, y - p.size[1] / 2]);
  redrawLevel();
});
window.addEventListener("mouseup", () => (dragging = false));

$("platform-color").addEventListener("input", () => {
  if (selectedPlatform >= 0) {
    editor.recolorPlatform(
      selectedPlatform,
      hexToRgb(($("platform-color") as HTMLInputElement).value)
    );
    redrawLevel();
  }
});
$("platform-delete").addEventListener("click", () => {
  if (selectedPlatform >= 0 && editor.platforms.length > 1) {
    editor.removePlatform(selectedPlatform);
    selectedPlatform = -1;
    redrawLevel();
  }
});

const gradientBox = $("gradient-stops");
function renderGradientPickers(): void {
  gradientBox.innerHTML = "";
  editor.gradient.forEach((stop, i) => {
    const input = document.createElement("input");
    input.type = "color";
    input.value =
      "#" + stop.map((c) => c.toString(16).padStart(2, "0")).join("");
    input.addEventListener("input", () => {
      editor.setGradientStop(i, hexToRgb(input.value));
      redrawLevel();
    });
    gradientBox.appendChild(input);
  });
}
$("gradient-add").addEventListener("click", () => {
  editor.setGradientStop(editor.gradient.length, [128, 128, 128]);
  renderGradientPickers();
  redrawLevel();
});
$("gradient-remove").addEventListener("click", () => {
  try {
    editor.removeGradientStop(editor.gradient.length - 1);
  } catch (err) {
    toast((err as Error).message);
  }
  renderGradientPickers();
  redrawLevel();
});

const levelPanel = new PromptPanel(
  api,
  {
    promptText: $("level-prompt") as HTMLTextAreaElement,
    generateButton: $("level-generate") as HTMLButtonElement,
    status: $("level-status"),
    audio: $("level-audio") as HTMLAudioElement,
  },
  toast
);

$("level-save").addEventListener("click", async () => {
  try {
    const doc = currentLevelDoc();
    await api.saveLevel(doc);
    await levelPanel.showPreview("levels", doc.id);
    toast(`saved level ${doc.id}`);
  } catch (err) {
    toast((err as Error).message);
  }
});

$("level-caption").addEventListener("click", async () => {
  try {
    const doc = currentLevelDoc();
    await api.saveLevel(doc);
    const png = await captureLevelPng(doc);
    const caption = await api.uploadCaption(doc.id, png);
    toast(`caption: ${caption}`);
    await levelPanel.showPreview("levels", doc.id, "caption");
  } catch (err) {
    toast((err as Error).message);
  }
});

$("level-play").addEventListener("click", () => {
  player = spawnPlayer(editor.export());
});

window.addEventListener("keydown", (e) => {
  if (e.key === "ArrowLeft") keys.left = true;
  if (e.key === "ArrowRight") keys.right = true;
  if (e.key === "ArrowUp" || e.key === " ") keys.jump = true;
});
window.addEventListener("keyup", (e) => {
  if (e.key === "ArrowLeft") keys.left = false;
  if (e.key === "ArrowRight") keys.right = false;
  if (e.key === "ArrowUp" || e.key === " ") keys.jump = false;
});

// --- vehicle builder -----------------------------------------------------

const builder = new VehicleBuilder("my-vehicle");
builder.addWheel("wooden_wagon_wheel", [-0.7, 0]);
builder.addWheel("wooden_wagon_wheel", [0.7, 0]);
builder.addPart("cardboard_box", [0, 0.6]);

const vehicleCanvas = $("vehicle-canvas") as HTMLCanvasElement;
const vehicleCtx = vehicleCanvas.getContext("2d")!;
let replay: SimulationDoc | null = null;
let replayStart = 0;

function redrawVehicle(): void {
  vehicleCtx.fillStyle = "#cfe8ff";
  vehicleCtx.fillRect(0, 0, vehicleCanvas.width, vehicleCanvas.height);
  vehicleCtx.fillStyle = "#a1887f";
  vehicleCtx.fillRect(0, vehicleCanvas.height - 60, vehicleCanvas.width, 60);
  drawVehicle(
    vehicleCtx,
    builder.export(),
    vehicleCanvas.width / 2,
    vehicleCanvas.height - 100,
    90
  );
}

const palette = $("vehicle-palette");
for (const w of WHEEL_PALETTE) {
  const b = document.createElement("button");
  b.textContent = w.label;
  b.addEventListener("click", () => {
    builder.addWheel(w.type, [Math.random() * 2 - 1, 0]);
    redrawVehicle();
  });
  palette.appendChild(b);
}
for (const p of BODY_PALETTE) {
  const b = document.createElement("button");
  b.textContent = p.label;
  b.addEventListener("click", () => {
    builder.addPart(p.type, [Math.random() * 2 - 1, 0.5]);
    redrawVehicle();
  });
  palette.appendChild(b);
}
$("vehicle-clear").addEventListener("click", () => {
  builder.wheels.length = 0;
  builder.parts.length = 0;
  redrawVehicle();
});

const vehiclePanel = new PromptPanel(
  api,
  {
    promptText: $("vehicle-prompt") as HTMLTextAreaElement,
    generateButton: $("vehicle-generate") as HTMLButtonElement,
    status: $("vehicle-status"),
    audio: $("vehicle-audio") as HTMLAudioElement,
  },
  toast
);

function currentVehicleDoc() {
  const doc = builder.export();
  doc.id = ($("vehicle-id") as HTMLInputElement).value || "my-vehicle";
  return doc;
}

$("vehicle-save").addEventListener("click", async () => {
  try {
    const doc = currentVehicleDoc();
    await api.saveVehicle(doc);
    await vehiclePanel.showPreview("vehicles", doc.id);
    toast(`saved vehicle ${doc.id}`);
  } catch (err) {
    toast((err as Error).message);
  }
});

$("vehicle-caption").addEventListener("click", async () => {
  try {
    const doc = currentVehicleDoc();
    await api.saveVehicle(doc);
    const png = await captureVehiclePng(doc);
    const caption = await api.uploadCaption(doc.id, png);
    toast(`caption: ${caption}`);
    await vehiclePanel.showPreview("vehicles", doc.id, "caption");
  } catch (err) {
    toast((err as Error).message);
  }
});

$("vehicle-test").addEventListener("click", async () => {
  try {
    const doc = currentVehicleDoc();
    await api.saveVehicle(doc);
    const seed = parseInt(($("terrain-seed") as HTMLInputElement).value, 10) || 42;
    replay = await api.simulate(doc.id, seed);
    replayStart = performance.now();
    const sfx = $("vehicle-audio") as HTMLAudioElement;
    if (sfx.src) void sfx.play().catch(() => {});
    $("vehicle-status").textContent =
      `verdict: ${replay.outcome.verdict} at x=${replay.outcome.final_x.toFixed(1)}m`;
  } catch (err) {
    toast((err as Error).message);
  }
});

function drawReplay(sim: SimulationDoc, t: number): void {
  const frame = frameAt(sim.trace.samples, t);
  vehicleCtx.fillStyle = "#cfe8ff";
  vehicleCtx.fillRect(0, 0, vehicleCanvas.width, vehicleCanvas.height);
  const scale = 40;
  const camX = frame.x * scale - vehicleCanvas.width / 3;
  vehicleCtx.fillStyle = "#a1887f";
  vehicleCtx.fillRect(0, vehicleCanvas.height - 60, vehicleCanvas.width, 60);
  drawVehicle(
    vehicleCtx,
    builder.export(),
    frame.x * scale - camX,
    vehicleCanvas.height - 60 - frame.y * scale,
    scale,
    frame.angle
  );
  vehicleCtx.fillStyle = "#333";
  vehicleCtx.fillText(`t=${frame.t.toFixed(2)}s x=${frame.x.toFixed(1)}m`, 10, 16);
}

// --- frame loop ----------------------------------------------------------

let lastTick = performance.now();
function tick(now: number): void {
  const dt = Math.min((now - lastTick) / 1000, 0.05);
  lastTick = now;

  if (!($("tab-level") as HTMLElement).hidden) {
    if (player) player = stepPlayer(player, keys, editor.export(), dt);
    redrawLevel();
  }
  if (!($("tab-vehicle") as HTMLElement).hidden) {
    if (replay) {
      const t = (now - replayStart) / 1000;
      if (t <= replayDuration(replay.trace.samples)) drawReplay(replay, t);
      else {
        drawReplay(replay, replayDuration(replay.trace.samples));
        const sfx = $("vehicle-audio") as HTMLAudioElement;
        sfx.pause();
      }
    } else {
      redrawVehicle();
    }
  }
  requestAnimationFrame(tick);
}

renderGradientPickers();
redrawLevel();
redrawVehicle();
requestAnimationFrame(tick);
