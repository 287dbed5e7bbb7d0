// Canvas rendering: grid, static cops (evaluated from the generator spec),
// active cops, robber, cone guide lines, and the potential sidebar.
// The client renders server views only; it never decides game outcomes.

import { Camera, visibleRange, worldToScreen } from "./camera";
import { contains } from "./copsets";
import type { View } from "./protocol";

const COLORS = {
  background: "#11151c",
  gridMinor: "#1e2530",
  gridAxis: "#3a4559",
  staticCop: "#4f6784",
  activeCop: "#e4a11b",
  activeCopMatched: "#ff5d5d",
  robber: "#3ddc84",
  cone: "rgba(228, 161, 27, 0.25)",
  text: "#c9d4e3",
  barBack: "#27303f",
  barFill: "#e4a11b",
};

export function renderScene(
  ctx: CanvasRenderingContext2D,
  view: View | null,
  cam: Camera,
  width: number,
  height: number,
): void {
  ctx.fillStyle = COLORS.background;
  ctx.fillRect(0, 0, width, height);
  drawGrid(ctx, cam, width, height);
  if (!view) return;
  drawStaticCops(ctx, view, cam, width, height);
  if (view.robber) {
    drawConeGuides(ctx, view.robber, cam, width, height);
  }
  drawActiveCops(ctx, view, cam, width, height);
  if (view.robber) {
    drawDisc(ctx, cam, width, height, view.robber[0], view.robber[1], COLORS.robber, 0.38);
  }
  drawPotentialBars(ctx, view, width);
  drawStatusLine(ctx, view, height);
}

function drawGrid(
  ctx: CanvasRenderingContext2D,
  cam: Camera,
  width: number,
  height: number,
): void {
  const r = visibleRange(cam, width, height);
  ctx.lineWidth = 1;
  for (let x = r.x0; x <= r.x1; x++) {
    const [sx] = worldToScreen(cam, width, height, x, 0);
    ctx.strokeStyle = x === 0 ? COLORS.gridAxis : COLORS.gridMinor;
    ctx.beginPath();
    ctx.moveTo(sx, 0);
    ctx.lineTo(sx, height);
    ctx.stroke();
  }
  for (let y = r.y0; y <= r.y1; y++) {
    const [, sy] = worldToScreen(cam, width, height, 0, y);
    ctx.strokeStyle = y === 0 ? COLORS.gridAxis : COLORS.gridMinor;
    ctx.beginPath();
    ctx.moveTo(0, sy);
    ctx.lineTo(width, sy);
    ctx.stroke();
  }
}

function drawStaticCops(
  ctx: CanvasRenderingContext2D,
  view: View,
  cam: Camera,
  width: number,
  height: number,
): void {
  const r = visibleRange(cam, width, height);
  const active = new Set(Object.values(view.cops).map(([x, y]) => `${x},${y}`));
  for (let x = r.x0; x <= r.x1; x++) {
    for (let y = r.y0; y <= r.y1; y++) {
      if (!contains(view.spec, [x, y])) continue;
      if (active.has(`${x},${y}`)) continue; // drawn as an active cop instead
      drawDisc(ctx, cam, width, height, x, y, COLORS.staticCop, 0.22);
    }
  }
}

function drawActiveCops(
  ctx: CanvasRenderingContext2D,
  view: View,
  cam: Camera,
  width: number,
  height: number,
): void {
  for (const [label, [x, y]] of Object.entries(view.cops)) {
    const matched = view.matched[label] ?? false;
    const color = matched ? COLORS.activeCopMatched : COLORS.activeCop;
    drawDisc(ctx, cam, width, height, x, y, color, 0.34);
    const [sx, sy] = worldToScreen(cam, width, height, x, y);
    ctx.fillStyle = COLORS.text;
    ctx.font = `${Math.max(9, cam.scale * 0.32)}px monospace`;
    ctx.textAlign = "center";
    ctx.fillText(label, sx, sy - cam.scale * 0.45);
  }
}

// Diagonal guide lines through the robber: the boundaries of the four cones.
function drawConeGuides(
  ctx: CanvasRenderingContext2D,
  robber: [number, number],
  cam: Camera,
  width: number,
  height: number,
): void {
  const [rx, ry] = robber;
  const span = Math.max(width, height) / cam.scale;
  ctx.strokeStyle = COLORS.cone;
  ctx.lineWidth = 1.5;
  for (const [dx, dy] of [
    [1, 1],
    [1, -1],
  ] as const) {
    const [ax, ay] = worldToScreen(cam, width, height, rx - dx * span, ry - dy * span);
    const [bx, by] = worldToScreen(cam, width, height, rx + dx * span, ry + dy * span);
    ctx.beginPath();
    ctx.moveTo(ax, ay);
    ctx.lineTo(bx, by);
    ctx.stroke();
  }
}

function drawDisc(
  ctx: CanvasRenderingContext2D,
  cam: Camera,
  width: number,
  height: number,
  wx: number,
  wy: number,
  color: string,
  radiusCells: number,
): void {
  const [sx, sy] = worldToScreen(cam, width, height, wx, wy);
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.arc(sx, sy, Math.max(2, cam.scale * radiusCells), 0, Math.PI * 2);
  ctx.fill();
}

// Per-direction countdown bars: current potential over its starting value,
// so the monotone descent the strategy guarantees is visible.
function drawPotentialBars(
  ctx: CanvasRenderingContext2D,
  view: View,
  width: number,
): void {
  const labels = Object.keys(view.potentials).sort();
  const barWidth = 120;
  const x = width - barWidth - 16;
  let y = 16;
  ctx.font = "12px monospace";
  ctx.textAlign = "left";
  const initialTotal = view.bound || 1;
  for (const label of labels) {
    const pot = view.potentials[label] ?? 0;
    const frac = Math.min(1, pot / Math.max(1, initialTotal / labels.length));
    ctx.fillStyle = COLORS.barBack;
    ctx.fillRect(x, y, barWidth, 10);
    ctx.fillStyle = COLORS.barFill;
    ctx.fillRect(x, y, barWidth * frac, 10);
    ctx.fillStyle = COLORS.text;
    ctx.fillText(`${label} ${pot}`, x - 64, y + 9);
    y += 18;
  }
  ctx.fillStyle = COLORS.text;
  ctx.fillText(`bound ${view.bound}  turn ${view.turn}`, x - 64, y + 12);
}

function drawStatusLine(
  ctx: CanvasRenderingContext2D,
  view: View,
  height: number,
): void {
  let text: string;
  if (view.phase === "awaiting_placement") {
    text =
      view.verdict.outcome === "winning"
        ? "click a cell to place the robber (this copset always wins: you will be caught)"
        : `click to place; escape exists: run ${view.verdict.witness?.direction} from (${view.verdict.witness?.start})`;
  } else if (view.phase === "awaiting_robber_move") {
    text = "your move: arrow keys to step, space to stay";
  } else if (view.status === "captured") {
    text = `captured on turn ${view.turn} by ${view.capturedBy ?? "a cop"}`;
  } else {
    text = `game over (${view.status})`;
  }
  ctx.fillStyle = COLORS.text;
  ctx.font = "14px monospace";
  ctx.textAlign = "left";
  ctx.fillText(text, 16, height - 16);
}
