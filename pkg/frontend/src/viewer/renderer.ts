// Canvas-2D stick figure renderer: bones as strokes, joints as dots, a floor
// grid for orientation, and an equirectangular backdrop with blur/intensity.

import type { CameraPoseRecord } from "../api/types.js";
import type { BvhClip } from "../bvh/parse.js";
import { boneSegments, framePositions } from "../bvh/fk.js";
import { cameraBasis, projectPoint, type Vec3 } from "./camera.js";

const CM_TO_M = 0.01;

/** The subset of CanvasRenderingContext2D the renderer uses (stubable in tests). */
export interface Ctx2D {
  canvas: { width: number; height: number };
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  stroke(): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  drawImage(img: CanvasImageSource, x: number, y: number, w: number, h: number): void;
  save(): void;
  restore(): void;
  strokeStyle: string;
  fillStyle: string;
  lineWidth: number;
  globalAlpha: number;
  filter: string;
}

export interface CharacterSnapshot {
  speaker: string;
  clip: BvhClip;
  frame: number;
  /** stage position in meters; the clip's own root translation is local sway */
  offsetX: number;
  offsetZ: number;
  active: boolean;
}

export interface Backdrop {
  image: CanvasImageSource | null;
  blur: number; // 0..1
  intensity: number; // 0..2
}

function worldJointPositions(snapshot: CharacterSnapshot): Vec3[] {
  const raw = framePositions(snapshot.clip, snapshot.frame);
  const out: Vec3[] = [];
  for (let j = 0; j < snapshot.clip.joints.length; j++) {
    out.push({
      x: raw[j * 3]! * CM_TO_M + snapshot.offsetX,
      y: raw[j * 3 + 1]! * CM_TO_M,
      z: raw[j * 3 + 2]! * CM_TO_M + snapshot.offsetZ,
    });
  }
  return out;
}

export function drawBackdrop(ctx: Ctx2D, backdrop: Backdrop): void {
  const { width, height } = ctx.canvas;
  ctx.save();
  ctx.fillStyle = "#10131a";
  ctx.fillRect(0, 0, width, height);
  if (backdrop.image) {
    ctx.filter = `blur(${(backdrop.blur * 12).toFixed(1)}px) brightness(${backdrop.intensity.toFixed(2)})`;
    ctx.globalAlpha = 1;
    ctx.drawImage(backdrop.image, 0, 0, width, height);
    ctx.filter = "none";
  }
  ctx.restore();
}

function drawFloor(ctx: Ctx2D, pose: CameraPoseRecord): void {
  const basis = cameraBasis(pose);
  const { width, height } = ctx.canvas;
  ctx.save();
  ctx.strokeStyle = "rgba(140, 160, 200, 0.25)";
  ctx.lineWidth = 1;
  for (let i = -4; i <= 4; i++) {
    const a = projectPoint(pose, basis, { x: i, y: 0, z: -4 }, width, height);
    const b = projectPoint(pose, basis, { x: i, y: 0, z: 4 }, width, height);
    const c = projectPoint(pose, basis, { x: -4, y: 0, z: i }, width, height);
    const d = projectPoint(pose, basis, { x: 4, y: 0, z: i }, width, height);
    if (a && b) {
      ctx.beginPath();
      ctx.moveTo(a.x, a.y);
      ctx.lineTo(b.x, b.y);
      ctx.stroke();
    }
    if (c && d) {
      ctx.beginPath();
      ctx.moveTo(c.x, c.y);
      ctx.lineTo(d.x, d.y);
      ctx.stroke();
    }
  }
  ctx.restore();
}

function drawSkeleton(ctx: Ctx2D, pose: CameraPoseRecord, snapshot: CharacterSnapshot): void {
  const basis = cameraBasis(pose);
  const { width, height } = ctx.canvas;
  const joints = worldJointPositions(snapshot);
  const projected = joints.map((p) => projectPoint(pose, basis, p, width, height));

  ctx.save();
  ctx.strokeStyle = snapshot.active ? "#7dd3fc" : "rgba(125, 211, 252, 0.35)";
  ctx.lineWidth = snapshot.active ? 3 : 2;
  for (const [p, c] of boneSegments(snapshot.clip)) {
    const a = projected[p];
    const b = projected[c];
    if (!a || !b) continue;
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
  }
  ctx.fillStyle = snapshot.active ? "#e0f2fe" : "rgba(224, 242, 254, 0.4)";
  for (const p of projected) {
    if (!p) continue;
    ctx.beginPath();
    ctx.arc(p.x, p.y, snapshot.active ? 2.5 : 2, 0, Math.PI * 2);
    ctx.fill();
  }
  const headIndex = snapshot.clip.joints.findIndex((j) => j.name === "head");
  const head = headIndex >= 0 ? projected[headIndex] : null;
  if (head) {
    ctx.beginPath();
    ctx.arc(head.x, head.y, Math.max(16 / head.depth, 4), 0, Math.PI * 2);
    ctx.stroke();
  }
  ctx.restore();
}

export function renderScene(
  ctx: Ctx2D,
  pose: CameraPoseRecord | null,
  snapshots: CharacterSnapshot[],
  backdrop: Backdrop,
): void {
  drawBackdrop(ctx, backdrop);
  if (!pose) return;
  drawFloor(ctx, pose);
  // draw the active speaker last so it sits on top
  const ordered = [...snapshots].sort((a, b) => Number(a.active) - Number(b.active));
  for (const snapshot of ordered) drawSkeleton(ctx, pose, snapshot);
}
