// BVH text parser matching the service's writer: depth-first joint order,
// per-joint channel order preserved, rotation values kept in degrees.

export class BvhParseError extends Error {
  constructor(
    readonly line: number,
    expected: string,
  ) {
    super(`line ${line}: expected ${expected}`);
    this.name = "BvhParseError";
  }
}

export interface BvhJoint {
  name: string;
  offset: [number, number, number];
  channels: string[];
  parent: number; // index into joints, -1 for the root
  endSite: [number, number, number] | null;
}

export interface BvhClip {
  joints: BvhJoint[];
  /** frames x joints x 3, rotation channels in declaration order, degrees */
  rotations: Float64Array;
  /** frames x 3 world root translation */
  rootPositions: Float64Array;
  frameTime: number;
  frameCount: number;
}

export function clipDuration(clip: BvhClip): number {
  return clip.frameCount * clip.frameTime;
}

const POSITION = ["Xposition", "Yposition", "Zposition"];
const ROTATION = ["Xrotation", "Yrotation", "Zrotation"];
const KNOWN = new Set([...POSITION, ...ROTATION]);

interface Row {
  line: number;
  tokens: string[];
}

class Cursor {
  private pos = 0;
  private readonly rows: Row[];

  constructor(text: string) {
    this.rows = [];
    const lines = text.split(/\r?\n/);
    for (let i = 0; i < lines.length; i++) {
      const tokens = lines[i]!.trim().split(/\s+/).filter((t) => t.length > 0);
      if (tokens.length > 0) this.rows.push({ line: i + 1, tokens });
    }
  }

  peek(): Row | null {
    return this.pos < this.rows.length ? this.rows[this.pos]! : null;
  }

  take(expected: string): Row {
    const row = this.peek();
    if (row === null) {
      const last = this.rows.length > 0 ? this.rows[this.rows.length - 1]!.line + 1 : 1;
      throw new BvhParseError(last, expected);
    }
    this.pos += 1;
    return row;
  }
}

function parseFloats(tokens: string[], line: number, count: number, expected: string): number[] {
  if (tokens.length !== count) throw new BvhParseError(line, expected);
  const out = tokens.map(Number);
  if (out.some((v) => Number.isNaN(v))) throw new BvhParseError(line, expected);
  return out;
}

function parseJoint(cur: Cursor, name: string, isRoot: boolean, parent: number, joints: BvhJoint[]): void {
  let row = cur.take("{");
  if (row.tokens.length !== 1 || row.tokens[0] !== "{") throw new BvhParseError(row.line, "{");

  row = cur.take("OFFSET");
  if (row.tokens[0] !== "OFFSET") throw new BvhParseError(row.line, "OFFSET");
  const offset = parseFloats(row.tokens.slice(1), row.line, 3, "OFFSET with 3 numbers");

  row = cur.take("CHANNELS");
  if (row.tokens[0] !== "CHANNELS") throw new BvhParseError(row.line, "CHANNELS");
  const declared = Number(row.tokens[1]);
  if (!Number.isInteger(declared)) throw new BvhParseError(row.line, "CHANNELS with a count");
  const channels = row.tokens.slice(2);
  if (channels.length !== declared) throw new BvhParseError(row.line, `${declared} channel names`);
  for (const ch of channels) {
    if (!KNOWN.has(ch)) throw new BvhParseError(row.line, "channel name");
  }
  const rot = channels.filter((c) => ROTATION.includes(c));
  if (isRoot) {
    const pos = channels.filter((c) => POSITION.includes(c));
    if (declared !== 6 || new Set(pos).size !== 3 || new Set(rot).size !== 3) {
      throw new BvhParseError(row.line, "root with 3 position + 3 rotation channels");
    }
  } else if (declared !== 3 || new Set(rot).size !== 3) {
    throw new BvhParseError(row.line, "3 distinct rotation channels");
  }

  const index = joints.length;
  const joint: BvhJoint = {
    name,
    offset: offset as [number, number, number],
    channels,
    parent,
    endSite: null,
  };
  joints.push(joint);

  for (;;) {
    row = cur.take("JOINT, End Site, or }");
    if (row.tokens.length === 1 && row.tokens[0] === "}") break;
    if (row.tokens[0] === "JOINT") {
      if (row.tokens.length < 2) throw new BvhParseError(row.line, "JOINT with a name");
      parseJoint(cur, row.tokens.slice(1).join(" "), false, index, joints);
    } else if (row.tokens[0] === "End" && row.tokens[1] === "Site") {
      row = cur.take("{");
      if (row.tokens.length !== 1 || row.tokens[0] !== "{") throw new BvhParseError(row.line, "{");
      row = cur.take("OFFSET");
      if (row.tokens[0] !== "OFFSET") throw new BvhParseError(row.line, "OFFSET");
      joint.endSite = parseFloats(row.tokens.slice(1), row.line, 3, "OFFSET with 3 numbers") as [
        number,
        number,
        number,
      ];
      row = cur.take("}");
      if (row.tokens.length !== 1 || row.tokens[0] !== "}") throw new BvhParseError(row.line, "}");
    } else {
      throw new BvhParseError(row.line, "JOINT, End Site, or }");
    }
  }
}

export function parseBvh(text: string): BvhClip {
  const cur = new Cursor(text);

  let row = cur.take("HIERARCHY");
  if (row.tokens.length !== 1 || row.tokens[0] !== "HIERARCHY") {
    throw new BvhParseError(row.line, "HIERARCHY");
  }
  row = cur.take("ROOT with a name");
  if (row.tokens[0] !== "ROOT" || row.tokens.length < 2) {
    throw new BvhParseError(row.line, "ROOT with a name");
  }
  const joints: BvhJoint[] = [];
  parseJoint(cur, row.tokens.slice(1).join(" "), true, -1, joints);

  row = cur.take("MOTION");
  if (row.tokens.length !== 1 || row.tokens[0] !== "MOTION") {
    throw new BvhParseError(row.line, "MOTION");
  }
  row = cur.take("Frames: <count>");
  if (row.tokens.length !== 2 || row.tokens[0] !== "Frames:") {
    throw new BvhParseError(row.line, "Frames: <count>");
  }
  const frameCount = Number(row.tokens[1]);
  if (!Number.isInteger(frameCount) || frameCount < 0) {
    throw new BvhParseError(row.line, "Frames: <count>");
  }
  row = cur.take("Frame Time: <seconds>");
  if (row.tokens.length !== 3 || row.tokens[0] !== "Frame" || row.tokens[1] !== "Time:") {
    throw new BvhParseError(row.line, "Frame Time: <seconds>");
  }
  const frameTime = Number(row.tokens[2]);
  if (!Number.isFinite(frameTime) || frameTime <= 0) {
    throw new BvhParseError(row.line, "positive frame time");
  }

  const nChannels = joints.reduce((n, j) => n + j.channels.length, 0);
  const rotations = new Float64Array(frameCount * joints.length * 3);
  const rootPositions = new Float64Array(frameCount * 3);
  for (let f = 0; f < frameCount; f++) {
    const frameRow = cur.peek();
    if (frameRow === null) {
      throw new BvhParseError(0, `frame data (declared ${frameCount} frames, found ${f})`);
    }
    cur.take("frame row");
    if (frameRow.tokens.length !== nChannels) {
      throw new BvhParseError(frameRow.line, `${nChannels} channel values`);
    }
    let col = 0;
    for (let j = 0; j < joints.length; j++) {
      let r = 0;
      for (const ch of joints[j]!.channels) {
        const value = Number(frameRow.tokens[col]);
        if (Number.isNaN(value)) throw new BvhParseError(frameRow.line, "numeric channel row");
        const posAxis = POSITION.indexOf(ch);
        if (posAxis >= 0) {
          rootPositions[f * 3 + posAxis] = value;
        } else {
          rotations[(f * joints.length + j) * 3 + r] = value;
          r += 1;
        }
        col += 1;
      }
    }
  }
  const extra = cur.peek();
  if (extra !== null) throw new BvhParseError(extra.line, "end of file");
  if (frameCount === 0) throw new BvhParseError(0, "at least one frame");

  return { joints, rotations, rootPositions, frameTime, frameCount };
}
