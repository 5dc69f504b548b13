import { describe, expect, it } from "vitest";

import { BvhParseError, clipDuration, parseBvh } from "../src/bvh/parse.js";
import { boneSegments, frameForTime, framePositions } from "../src/bvh/fk.js";
import { fixtureJson, fixtureText } from "./helpers.js";

const bvhText = fixtureText("anim-line-0.bvh");

interface FkExpected {
  file: string;
  joints: string[];
  frameTime: number;
  frames: number[];
  positions: number[][][]; // frame x joint x xyz, centimeters
}

describe("parseBvh", () => {
  it("reads the served clip structure", () => {
    const clip = parseBvh(bvhText);
    expect(clip.joints).toHaveLength(17);
    expect(clip.frameCount).toBe(181);
    expect(clip.frameTime).toBeCloseTo(1 / 60, 12);
    expect(clip.joints[0]!.name).toBe("pelvis");
    expect(clip.joints[0]!.parent).toBe(-1);
    expect(clip.joints[0]!.channels).toHaveLength(6);
    for (const joint of clip.joints.slice(1)) {
      expect(joint.channels).toHaveLength(3);
      expect(joint.parent).toBeGreaterThanOrEqual(0);
    }
    expect(clipDuration(clip)).toBeCloseTo(181 / 60, 9);
  });

  it("derives one bone segment per non-root joint", () => {
    const clip = parseBvh(bvhText);
    const segments = boneSegments(clip);
    expect(segments).toHaveLength(16);
    for (const [parent, child] of segments) {
      expect(parent).toBe(clip.joints[child]!.parent);
    }
  });

  it("rejects truncated files with a structured error", () => {
    for (const cut of [10, 120, 400, bvhText.indexOf("MOTION") + 8]) {
      expect(() => parseBvh(bvhText.slice(0, cut))).toThrow(BvhParseError);
    }
  });

  it("rejects unknown channel names", () => {
    const bad = bvhText.replace("Xrotation", "Wrotation");
    expect(() => parseBvh(bad)).toThrow(BvhParseError);
  });

  it("rejects trailing rows after the declared frames", () => {
    expect(() => parseBvh(bvhText + "\n1 2 3\n")).toThrow(/end of file/);
  });

  it("rejects frame rows with the wrong arity", () => {
    const lines = bvhText.split("\n");
    const frameTimeAt = lines.findIndex((l) => l.startsWith("Frame Time:"));
    const row = lines[frameTimeAt + 1]!.trim().split(/\s+/);
    lines[frameTimeAt + 1] = row.slice(0, -1).join(" ");
    expect(() => parseBvh(lines.join("\n"))).toThrow(/channel values/);
  });

  it("rejects a clip with zero frames", () => {
    const empty = [
      "HIERARCHY",
      "ROOT a",
      "{",
      "  OFFSET 0 0 0",
      "  CHANNELS 6 Xposition Yposition Zposition Zrotation Xrotation Yrotation",
      "  End Site",
      "  {",
      "    OFFSET 0 1 0",
      "  }",
      "}",
      "MOTION",
      "Frames: 0",
      "Frame Time: 0.016667",
    ].join("\n");
    expect(() => parseBvh(empty)).toThrow(BvhParseError);
  });

  it("requires six channels on the root", () => {
    const bad = bvhText.replace(
      "CHANNELS 6 Xposition Yposition Zposition Zrotation Xrotation Yrotation",
      "CHANNELS 3 Zrotation Xrotation Yrotation",
    );
    expect(() => parseBvh(bad)).toThrow(BvhParseError);
  });
});

describe("forward kinematics", () => {
  it("matches the service's solver on recorded frames", () => {
    // fk-expected.json holds world positions computed by the backend for the
    // same clip; both solvers must agree to well under a micrometer
    const clip = parseBvh(bvhText);
    const expected = fixtureJson<FkExpected>("fk-expected.json");
    expect(clip.joints.map((j) => j.name)).toEqual(expected.joints);

    let worst = 0;
    expected.frames.forEach((frame, row) => {
      const ours = framePositions(clip, frame);
      expected.positions[row]!.forEach((xyz, j) => {
        for (let k = 0; k < 3; k++) {
          worst = Math.max(worst, Math.abs(ours[j * 3 + k]! - xyz[k]!));
        }
      });
    });
    expect(worst).toBeLessThan(1e-9);
  });

  it("places the root at offset plus translation", () => {
    const clip = parseBvh(bvhText);
    const pos = framePositions(clip, 0);
    expect(pos[0]).toBeCloseTo(clip.joints[0]!.offset[0] + clip.rootPositions[0]!, 12);
    expect(pos[1]).toBeCloseTo(clip.joints[0]!.offset[1] + clip.rootPositions[1]!, 12);
  });

  it("rejects out-of-range frames", () => {
    const clip = parseBvh(bvhText);
    expect(() => framePositions(clip, -1)).toThrow(RangeError);
    expect(() => framePositions(clip, clip.frameCount)).toThrow(RangeError);
  });
});

describe("frameForTime", () => {
  it("rounds to the nearest frame and clamps to the clip", () => {
    const clip = parseBvh(bvhText);
    expect(frameForTime(clip, 0)).toBe(0);
    expect(frameForTime(clip, -2)).toBe(0);
    expect(frameForTime(clip, 0.5)).toBe(30);
    expect(frameForTime(clip, 1e9)).toBe(clip.frameCount - 1);
  });
});
