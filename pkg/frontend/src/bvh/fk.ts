// Forward kinematics: world joint positions from hierarchical offsets and
// per-joint Euler channels (degrees, composed in declared channel order).

import type { BvhClip } from "./parse.js";

const DEG = Math.PI / 180;

type Mat3 = Float64Array; // row-major 3x3

function axisMatrix(channel: string, degrees: number): Mat3 {
  const a = degrees * DEG;
  const c = Math.cos(a);
  const s = Math.sin(a);
  const m = new Float64Array(9);
  if (channel === "Xrotation") {
    m[0] = 1;
    m[4] = c;
    m[5] = -s;
    m[7] = s;
    m[8] = c;
  } else if (channel === "Yrotation") {
    m[4] = 1;
    m[0] = c;
    m[2] = s;
    m[6] = -s;
    m[8] = c;
  } else {
    m[8] = 1;
    m[0] = c;
    m[1] = -s;
    m[3] = s;
    m[4] = c;
  }
  return m;
}

function matMul(a: Mat3, b: Mat3): Mat3 {
  const out = new Float64Array(9);
  for (let i = 0; i < 3; i++) {
    let r0 = 0;
    let r1 = 0;
    let r2 = 0;
    for (let k = 0; k < 3; k++) {
      const aik = a[i * 3 + k]!;
      r0 += aik * b[k * 3 + 0]!;
      r1 += aik * b[k * 3 + 1]!;
      r2 += aik * b[k * 3 + 2]!;
    }
    out[i * 3 + 0] = r0;
    out[i * 3 + 1] = r1;
    out[i * 3 + 2] = r2;
  }
  return out;
}

function matVec(m: Mat3, v: readonly [number, number, number]): [number, number, number] {
  return [
    m[0]! * v[0] + m[1]! * v[1] + m[2]! * v[2],
    m[3]! * v[0] + m[4]! * v[1] + m[5]! * v[2],
    m[6]! * v[0] + m[7]! * v[1] + m[8]! * v[2],
  ];
}

/** World positions for one frame: joints x 3, same units as the file. */
export function framePositions(clip: BvhClip, frame: number): Float64Array {
  if (frame < 0 || frame >= clip.frameCount) {
    throw new RangeError(`frame ${frame} outside 0..${clip.frameCount - 1}`);
  }
  const J = clip.joints.length;
  const pos = new Float64Array(J * 3);
  const world: Mat3[] = new Array(J);
  for (let j = 0; j < J; j++) {
    const joint = clip.joints[j]!;
    const rotChannels = joint.channels.filter((c) => c.endsWith("rotation"));
    let local = axisMatrix(rotChannels[0]!, clip.rotations[(frame * J + j) * 3]!);
    for (let r = 1; r < 3; r++) {
      local = matMul(local, axisMatrix(rotChannels[r]!, clip.rotations[(frame * J + j) * 3 + r]!));
    }
    const p = joint.parent;
    if (p < 0) {
      pos[j * 3] = joint.offset[0] + clip.rootPositions[frame * 3]!;
      pos[j * 3 + 1] = joint.offset[1] + clip.rootPositions[frame * 3 + 1]!;
      pos[j * 3 + 2] = joint.offset[2] + clip.rootPositions[frame * 3 + 2]!;
      world[j] = local;
    } else {
      const step = matVec(world[p]!, joint.offset);
      pos[j * 3] = pos[p * 3]! + step[0];
      pos[j * 3 + 1] = pos[p * 3 + 1]! + step[1];
      pos[j * 3 + 2] = pos[p * 3 + 2]! + step[2];
      world[j] = matMul(world[p]!, local);
    }
  }
  return pos;
}

/** Bone segments as [parentIndex, childIndex] pairs for drawing. */
export function boneSegments(clip: BvhClip): Array<[number, number]> {
  const out: Array<[number, number]> = [];
  for (let j = 0; j < clip.joints.length; j++) {
    const p = clip.joints[j]!.parent;
    if (p >= 0) out.push([p, j]);
  }
  return out;
}

/** Map a playback time to the nearest frame, clamped to the clip. */
export function frameForTime(clip: BvhClip, seconds: number): number {
  const f = Math.round(seconds / clip.frameTime);
  return Math.min(Math.max(f, 0), clip.frameCount - 1);
}
