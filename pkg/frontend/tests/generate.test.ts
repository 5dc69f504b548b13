import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api/client.js";
import type { CreateSceneResponse, JobRecord } from "../src/api/types.js";
import { GenerateFlow, extractSpeakers } from "../src/state/generate.js";
import { fakeFetch, fixtureJson } from "./helpers.js";

const offlineClient = () =>
  new ApiClient("", async () => {
    throw new Error("no network in this test");
  });

afterEach(() => {
  vi.useRealTimers();
});

describe("extractSpeakers", () => {
  it("finds speakers in order of first appearance, once each", () => {
    const script = [
      "Tom: Okay Bob, let's do it.",
      "Bob (to himself): I knew he'd cave.",
      "Tom: Ready?",
      "",
      "a bare stage direction, no colon",
      "Bob: Ready.",
    ].join("\n");
    expect(extractSpeakers(script)).toEqual(["Tom", "Bob"]);
  });

  it("ignores lines with a blank name or blank utterance", () => {
    expect(extractSpeakers("Bob:")).toEqual([]);
    expect(extractSpeakers("Bob:   ")).toEqual([]);
    expect(extractSpeakers(":  hello")).toEqual([]);
  });

  it("enforces the 40 character name budget the server uses", () => {
    const long = "A".repeat(41);
    const edge = "B".repeat(40);
    expect(extractSpeakers(`${long}: nope`)).toEqual([]);
    expect(extractSpeakers(`${edge}: fine`)).toEqual([edge]);
  });

  it("accepts non-latin speaker names", () => {
    expect(extractSpeakers("ველი: გამარჯობა")).toEqual(["ველი"]);
  });
});

describe("GenerateFlow", () => {
  it("keeps Synthesis disabled until every speaker has a voice and a character", () => {
    const flow = new GenerateFlow(offlineClient());
    expect(flow.canSynthesize()).toBe(false);

    flow.setScript("Ann: hi\nBob: yo");
    expect(flow.speakers).toEqual(["Ann", "Bob"]);
    expect(flow.canSynthesize()).toBe(false);

    flow.pick("Ann", "voiceId", "stub-f1");
    flow.pick("Ann", "modelId", "capsule-adult");
    expect(flow.canSynthesize()).toBe(false); // Bob still unpicked

    flow.pick("Bob", "voiceId", "stub-m1");
    flow.pick("Bob", "modelId", "capsule-kid");
    expect(flow.canSynthesize()).toBe(true);
  });

  it("keeps earlier picks when the script is retyped", () => {
    const flow = new GenerateFlow(offlineClient());
    flow.setScript("Ann: hi");
    flow.pick("Ann", "voiceId", "stub-f1");
    flow.setScript("Ann: hi\nBob: yo");
    expect(flow.picks.Ann?.voiceId).toBe("stub-f1");
    expect(flow.picks.Bob).toEqual({});
  });

  it("creates the scene with the picked cast and tracks the job to done", async () => {
    vi.useFakeTimers();
    let polls = 0;
    const { fn, calls } = fakeFetch((call) => {
      if (call.method === "POST" && call.url === "/api/scenes") {
        return { json: fixtureJson<CreateSceneResponse>("create-response.json") };
      }
      if (call.method === "POST" && call.url === "/api/scenes/fixture-scene/generate") {
        return { json: { jobId: "g1" } };
      }
      if (call.method === "GET" && call.url === "/api/jobs/g1") {
        polls += 1;
        return {
          json: fixtureJson<JobRecord>(polls === 1 ? "job-running.json" : "job-done.json"),
        };
      }
      return undefined;
    });

    const opened: string[] = [];
    const flow = new GenerateFlow(new ApiClient("", fn), (id) => opened.push(id));
    flow.setScript("Nora: a\nFelix: b\nIris: c");
    for (const [speaker, voiceId, modelId] of [
      ["Nora", "stub-f1", "capsule-adult"],
      ["Felix", "stub-f2", "capsule-kid"],
      ["Iris", "stub-m1", "capsule-adult"],
    ] as const) {
      flow.pick(speaker, "voiceId", voiceId);
      flow.pick(speaker, "modelId", modelId);
    }

    const done = flow.synthesize();
    await vi.advanceTimersByTimeAsync(0);

    // title and logline preview arrive with the create response
    expect(flow.title).toBe("Morning, did the overnight render finish");
    expect(flow.synopsis).toBe("A conversation between Nora, Felix, and Iris.");
    expect(flow.sceneId).toBe("fixture-scene");
    expect(flow.phase).toBe("generating");
    expect(flow.progress[0]).toBe("speech");
    expect(flow.progress[2]).toBe("pending");

    await vi.advanceTimersByTimeAsync(1000);
    await done;

    expect(flow.phase).toBe("done");
    expect(Object.values(flow.progress).every((stage) => stage === "done")).toBe(true);
    expect(flow.failures).toEqual({});
    expect(opened).toEqual(["fixture-scene"]);

    const create = calls.find((c) => c.url === "/api/scenes")!;
    expect(create.body).toEqual({
      script: "Nora: a\nFelix: b\nIris: c",
      cast: {
        Nora: { voiceId: "stub-f1", modelId: "capsule-adult" },
        Felix: { voiceId: "stub-f2", modelId: "capsule-kid" },
        Iris: { voiceId: "stub-m1", modelId: "capsule-adult" },
      },
    });
  });

  it("records per-line failures from the job", async () => {
    const { fn } = fakeFetch((call) => {
      if (call.method === "POST" && call.url === "/api/scenes") {
        return { json: fixtureJson<CreateSceneResponse>("create-response.json") };
      }
      if (call.method === "POST" && call.url.endsWith("/generate")) {
        return { json: { jobId: "g1" } };
      }
      return {
        json: {
          jobId: "g1",
          sceneId: "fixture-scene",
          state: "partial",
          lines: [
            { index: 0, stage: "done" },
            { index: 1, stage: "failed", error: "tts refused the line" },
          ],
        } satisfies JobRecord,
      };
    });
    const flow = new GenerateFlow(new ApiClient("", fn));
    flow.setScript("Nora: a\nFelix: b");
    flow.pick("Nora", "voiceId", "v");
    flow.pick("Nora", "modelId", "m");
    flow.pick("Felix", "voiceId", "v");
    flow.pick("Felix", "modelId", "m");

    await flow.synthesize();

    expect(flow.phase).toBe("done");
    expect(flow.progress[1]).toBe("failed");
    expect(flow.failures[1]).toBe("tts refused the line");
  });

  it("surfaces creation errors instead of generating", async () => {
    const { fn, calls } = fakeFetch(() => ({
      status: 422,
      json: { error: { code: "no_dialogue", message: "no speaker lines found" } },
    }));
    const flow = new GenerateFlow(new ApiClient("", fn));
    flow.setScript("Ann: hi");
    flow.pick("Ann", "voiceId", "v");
    flow.pick("Ann", "modelId", "m");

    await flow.synthesize();

    expect(flow.phase).toBe("error");
    expect(flow.error).toBe("no speaker lines found");
    expect(calls).toHaveLength(1); // never reached the generate route
  });

  it("does nothing when synthesize is called while ineligible", async () => {
    const { fn, calls } = fakeFetch(() => ({ json: {} }));
    const flow = new GenerateFlow(new ApiClient("", fn));
    flow.setScript("Ann: hi"); // no picks yet
    await flow.synthesize();
    expect(calls).toHaveLength(0);
    expect(flow.phase).toBe("editing");
  });
});
