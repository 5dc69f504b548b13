// Viewport state and perspective projection. When the lock is on the pose is
// exactly the server's per-line recommendation, byte for byte; unlocking
// enables free orbit (right-drag), zoom (wheel), and pan (middle-drag).

import type { CameraPoseRecord } from "../api/types.js";

export interface Vec3 {
  x: number;
  y: number;
  z: number;
}

const WORLD_UP: Vec3 = { x: 0, y: 1, z: 0 };

function sub(a: Vec3, b: Vec3): Vec3 {
  return { x: a.x - b.x, y: a.y - b.y, z: a.z - b.z };
}

function add(a: Vec3, b: Vec3): Vec3 {
  return { x: a.x + b.x, y: a.y + b.y, z: a.z + b.z };
}

function scale(a: Vec3, s: number): Vec3 {
  return { x: a.x * s, y: a.y * s, z: a.z * s };
}

function dot(a: Vec3, b: Vec3): number {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

function cross(a: Vec3, b: Vec3): Vec3 {
  return { x: a.y * b.z - a.z * b.y, y: a.z * b.x - a.x * b.z, z: a.x * b.y - a.y * b.x };
}

function norm(a: Vec3): number {
  return Math.hypot(a.x, a.y, a.z);
}

function normalize(a: Vec3): Vec3 {
  const n = norm(a);
  return n > 0 ? scale(a, 1 / n) : { x: 0, y: 0, z: 1 };
}

export function vec3(p: readonly [number, number, number]): Vec3 {
  return { x: p[0], y: p[1], z: p[2] };
}

export interface Basis {
  right: Vec3;
  up: Vec3;
  forward: Vec3;
}

export function cameraBasis(pose: CameraPoseRecord): Basis {
  const forward = normalize(sub(vec3(pose.lookAt), vec3(pose.position)));
  let right = cross(forward, WORLD_UP);
  if (norm(right) < 1e-9) right = { x: 1, y: 0, z: 0 }; // looking straight up/down
  right = normalize(right);
  let up = cross(right, forward);
  if (pose.roll !== 0) {
    const a = (pose.roll * Math.PI) / 180;
    const c = Math.cos(a);
    const s = Math.sin(a);
    const r2 = add(scale(right, c), scale(up, s));
    up = add(scale(up, c), scale(right, -s));
    right = r2;
  }
  return { right, up, forward };
}

/** Project a world point to canvas pixels. Returns null behind the camera. */
export function projectPoint(
  pose: CameraPoseRecord,
  basis: Basis,
  point: Vec3,
  width: number,
  height: number,
): { x: number; y: number; depth: number } | null {
  const rel = sub(point, vec3(pose.position));
  const zc = dot(rel, basis.forward);
  if (zc < 0.01) return null;
  const xc = dot(rel, basis.right);
  const yc = dot(rel, basis.up);
  const tanY = Math.tan(((pose.fovVertical / 2) * Math.PI) / 180);
  const tanX = tanY * (width / height);
  return {
    x: width / 2 + ((xc / (zc * tanX)) * width) / 2,
    y: height / 2 - ((yc / (zc * tanY)) * height) / 2,
    depth: zc,
  };
}

const clamp = (v: number, lo: number, hi: number) => Math.min(Math.max(v, lo), hi);

export interface Placement {
  speaker: string;
  x: number;
  z: number;
}

export class ViewportState {
  private serverPose: CameraPoseRecord | null = null;
  private freePose: CameraPoseRecord | null = null;
  locked = true;
  backgroundBlur = 0.3;
  backgroundIntensity = 1.0;
  placements: Placement[] = [];

  /** Active pose; equals the server recommendation exactly while locked. */
  get pose(): CameraPoseRecord | null {
    return this.locked ? this.serverPose : (this.freePose ?? this.serverPose);
  }

  setServerPose(pose: CameraPoseRecord): void {
    this.serverPose = pose;
    if (this.freePose === null) this.freePose = structuredClone(pose);
  }

  setLocked(locked: boolean): void {
    if (!locked && this.serverPose !== null) {
      // free flight starts from wherever the camera is now
      this.freePose = structuredClone(this.pose ?? this.serverPose);
    }
    this.locked = locked;
  }

  setBackgroundBlur(v: number): void {
    this.backgroundBlur = clamp(v, 0, 1);
  }

  setBackgroundIntensity(v: number): void {
    this.backgroundIntensity = clamp(v, 0, 2);
  }

  /** Right-drag: orbit around the look-at point. Pixel deltas. */
  orbit(dx: number, dy: number): void {
    const pose = this.ensureFree();
    if (!pose) return;
    const target = vec3(pose.lookAt);
    const offset = sub(vec3(pose.position), target);
    const radius = norm(offset);
    let azimuth = Math.atan2(offset.x, offset.z);
    let elevation = Math.asin(clamp(offset.y / (radius || 1), -1, 1));
    azimuth -= dx * 0.008;
    elevation = clamp(elevation + dy * 0.008, -1.45, 1.45);
    const cosE = Math.cos(elevation);
    pose.position = [
      target.x + radius * cosE * Math.sin(azimuth),
      target.y + radius * Math.sin(elevation),
      target.z + radius * cosE * Math.cos(azimuth),
    ];
  }

  /** Wheel: move along the view axis, never through the target. */
  zoom(deltaY: number): void {
    const pose = this.ensureFree();
    if (!pose) return;
    const target = vec3(pose.lookAt);
    const offset = sub(vec3(pose.position), target);
    const factor = clamp(1 + deltaY * 0.001, 0.5, 2);
    const radius = clamp(norm(offset) * factor, 0.2, 50);
    const dir = normalize(offset);
    const p = add(target, scale(dir, radius));
    pose.position = [p.x, p.y, p.z];
  }

  /** Middle-drag: translate camera and target together in the view plane. */
  pan(dx: number, dy: number): void {
    const pose = this.ensureFree();
    if (!pose) return;
    const basis = cameraBasis(pose);
    const dist = norm(sub(vec3(pose.lookAt), vec3(pose.position)));
    const step = add(scale(basis.right, -dx * 0.002 * dist), scale(basis.up, dy * 0.002 * dist));
    const p = add(vec3(pose.position), step);
    const t = add(vec3(pose.lookAt), step);
    pose.position = [p.x, p.y, p.z];
    pose.lookAt = [t.x, t.y, t.z];
  }

  private ensureFree(): CameraPoseRecord | null {
    if (this.locked) return null; // controls are inert while locked
    if (this.freePose === null && this.serverPose !== null) {
      this.freePose = structuredClone(this.serverPose);
    }
    return this.freePose;
  }
}
