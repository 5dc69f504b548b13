/** @vitest-environment jsdom */
import { describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api/client.js";
import type {
  CameraPoseRecord,
  LineRecord,
  SceneListItem,
  SceneRecord,
} from "../src/api/types.js";
import type { CardViewModel } from "../src/state/cards.js";
import { GenerateFlow } from "../src/state/generate.js";
import { renderCard, renderTimeline } from "../src/ui/cards.js";
import { renderModal } from "../src/ui/modal.js";
import { renderSceneList } from "../src/ui/app.js";
import { attachCameraControls, renderViewportControls } from "../src/ui/viewport.js";
import { ViewportState } from "../src/viewer/camera.js";
import { STYLES } from "../src/vocab.js";
import { fixtureJson } from "./helpers.js";

const scene = fixtureJson<SceneRecord>("scene.json");

function cardFor(line: LineRecord, over: Partial<CardViewModel> = {}): CardViewModel {
  return {
    line,
    confirmed: line,
    status: { state: "complete" },
    stage: null,
    playState: "idle",
    dirty: false,
    queued: null,
    inFlight: false,
    error: null,
    ...over,
  };
}

const noHandlers = { onPlay: () => {}, onStyle: () => {}, onSpeech: () => {} };

const offlineClient = () =>
  new ApiClient("", async () => {
    throw new Error("no network in this test");
  });

describe("card timeline", () => {
  it("renders one card per line with speaker, shot, and style", () => {
    const container = document.createElement("div");
    renderTimeline(document, container, scene.lines.map((l) => cardFor(l)), noHandlers);

    const cards = container.querySelectorAll("article.card");
    expect(cards).toHaveLength(6);
    const first = cards[0]!;
    expect(first.querySelector(".speaker")!.textContent).toBe("Nora");
    expect(first.querySelector(".shot")!.textContent).toBe("Medium shot / Eye level");
    const style = first.querySelector<HTMLSelectElement>("select.style")!;
    expect(style.value).toBe("Pensive");
    expect(style.options).toHaveLength(STYLES.length);
  });

  it("shows the stored reasoning on hover", () => {
    const el = renderCard(document, cardFor(scene.lines[0]!), 0, noHandlers);
    expect(el.title).toContain(scene.lines[0]!.emotionAnalysis);
    expect(el.title).toContain(scene.lines[0]!.shotAnalysis);
  });

  it("gates the play button on asset readiness", () => {
    const ready = renderCard(document, cardFor(scene.lines[0]!), 0, noHandlers);
    expect(ready.querySelector<HTMLButtonElement>("button.play")!.disabled).toBe(false);

    const pending = renderCard(
      document,
      cardFor(scene.lines[0]!, { status: { state: "pending" } }),
      0,
      noHandlers,
    );
    expect(pending.querySelector<HTMLButtonElement>("button.play")!.disabled).toBe(true);
    expect(pending.querySelector(".badge")!.textContent).toBe("not generated");

    const busy = renderCard(
      document,
      cardFor(scene.lines[0]!, { playState: "regenerating", stage: "gesture" }),
      0,
      noHandlers,
    );
    expect(busy.querySelector<HTMLButtonElement>("button.play")!.disabled).toBe(true);
    expect(busy.querySelector(".badge")!.textContent).toBe("regenerating: gesture");
  });

  it("shows conflict errors on the card", () => {
    const el = renderCard(
      document,
      cardFor(scene.lines[0]!, { error: "Scene is busy; your edit was reverted." }),
      0,
      noHandlers,
    );
    expect(el.querySelector(".badge.conflict")!.textContent).toContain("reverted");
  });

  it("routes style and speech changes to the handlers", () => {
    const onStyle = vi.fn();
    const onSpeech = vi.fn();
    const el = renderCard(document, cardFor(scene.lines[0]!), 3, {
      ...noHandlers,
      onStyle,
      onSpeech,
    });

    const style = el.querySelector<HTMLSelectElement>("select.style")!;
    style.value = "Happy";
    style.dispatchEvent(new Event("change"));
    expect(onStyle).toHaveBeenCalledWith(3, "Happy");

    const speech = el.querySelector<HTMLTextAreaElement>("textarea.speech")!;
    speech.value = scene.lines[0]!.speech; // unchanged: no call
    speech.dispatchEvent(new Event("change"));
    expect(onSpeech).not.toHaveBeenCalled();

    speech.value = "Something new to say.";
    speech.dispatchEvent(new Event("change"));
    expect(onSpeech).toHaveBeenCalledWith(3, "Something new to say.");
  });

  it("play button reflects the playing state", () => {
    const playing = renderCard(
      document,
      cardFor(scene.lines[0]!, { playState: "playing" }),
      0,
      noHandlers,
    );
    expect(playing.querySelector("button.play")!.textContent).toBe("Stop");
    expect(playing.className).toContain("play-playing");
  });
});

describe("generate modal", () => {
  function editingFlow(): GenerateFlow {
    const flow = new GenerateFlow(offlineClient());
    flow.voices = fixtureJson<{ voices: GenerateFlow["voices"] }>("voices.json").voices;
    flow.characters = fixtureJson<{ characters: GenerateFlow["characters"] }>(
      "characters.json",
    ).characters;
    return flow;
  }

  it("offers voice and character pickers per detected speaker", () => {
    const flow = editingFlow();
    flow.setScript("Ann: hi\nBob (to himself): hmm\nAnn: bye");
    const modal = renderModal(document, flow, () => {});

    const rows = modal.querySelectorAll<HTMLElement>(".picker-row");
    expect([...rows].map((r) => r.dataset.speaker)).toEqual(["Ann", "Bob"]);
    const voice = rows[0]!.querySelector<HTMLSelectElement>("select.voice-pick")!;
    expect(voice.options).toHaveLength(5); // placeholder + 4 voices
    const character = rows[0]!.querySelector<HTMLSelectElement>("select.character-pick")!;
    expect(character.options).toHaveLength(3); // placeholder + 2 characters

    expect(modal.querySelector<HTMLButtonElement>("button.synthesize")!.disabled).toBe(true);
  });

  it("enables Synthesis once every speaker is fully cast", () => {
    const flow = editingFlow();
    flow.setScript("Ann: hi\nBob: yo");
    const host = renderModal(document, flow, () => {});
    const row = host.querySelector<HTMLElement>('.picker-row[data-speaker="Ann"]')!;
    const voice = row.querySelector<HTMLSelectElement>("select.voice-pick")!;
    voice.value = "stub-f1";
    voice.dispatchEvent(new Event("change"));
    expect(flow.picks.Ann?.voiceId).toBe("stub-f1");

    flow.pick("Ann", "modelId", "capsule-adult");
    flow.pick("Bob", "voiceId", "stub-m1");
    flow.pick("Bob", "modelId", "capsule-kid");

    const rerendered = renderModal(document, flow, () => {});
    expect(rerendered.querySelector<HTMLButtonElement>("button.synthesize")!.disabled).toBe(
      false,
    );
  });

  it("shows the title and logline preview once created", () => {
    const flow = editingFlow();
    flow.title = "Morning, did the overnight render finish";
    flow.synopsis = "A conversation between Nora, Felix, and Iris.";
    flow.phase = "generating";
    flow.progress = { 0: "speech", 1: "failed" };
    flow.failures = { 1: "voice refused" };

    const modal = renderModal(document, flow, () => {});
    expect(modal.querySelector("h2")!.textContent).toBe(
      "Morning, did the overnight render finish",
    );
    expect(modal.querySelector(".logline")!.textContent).toContain("Nora, Felix, and Iris");

    const items = modal.querySelectorAll(".progress li");
    expect(items).toHaveLength(2);
    expect(items[0]!.textContent).toBe("line 0: speech");
    expect(items[1]!.textContent).toBe("line 1: failed (voice refused)");
    expect(items[1]!.className).toContain("failed");
    expect(modal.querySelector("button.close")!.textContent).toBe("Close");
  });

  it("offers to open the scene when generation completes", () => {
    const flow = editingFlow();
    flow.phase = "done";
    const onClose = vi.fn();
    const modal = renderModal(document, flow, onClose);
    const close = modal.querySelector<HTMLButtonElement>("button.close")!;
    expect(close.textContent).toBe("Open scene");
    close.click();
    expect(onClose).toHaveBeenCalledOnce();
  });
});

describe("scene list", () => {
  it("explains the empty state", () => {
    const container = document.createElement("div");
    renderSceneList(document, container, [], () => {});
    expect(container.querySelector(".empty-state")!.textContent).toContain("Synthesis");
  });

  it("opens a scene on click", () => {
    const container = document.createElement("div");
    const onOpen = vi.fn();
    renderSceneList(document, container, fixtureJson<SceneListItem[]>("scenes-list.json"), onOpen);
    const item = container.querySelector<HTMLButtonElement>("button.scene-item")!;
    expect(item.textContent).toContain("Morning, did the overnight render finish");
    item.click();
    expect(onOpen).toHaveBeenCalledWith("fixture-scene");
  });
});

describe("viewport controls", () => {
  it("reflects and updates the lock and backdrop settings", () => {
    const state = new ViewportState();
    const onLockChange = vi.fn();
    const onPresetChange = vi.fn();
    const bar = renderViewportControls(document, state, {
      onLockChange,
      onPresetChange,
      requestRender: () => {},
    });

    const lock = bar.querySelector<HTMLInputElement>("input.lock")!;
    expect(lock.checked).toBe(true);
    lock.checked = false;
    lock.dispatchEvent(new Event("change"));
    expect(state.locked).toBe(false);
    expect(onLockChange).toHaveBeenCalledWith(false);

    const blur = bar.querySelector<HTMLInputElement>("input.blur")!;
    blur.value = "0.8";
    blur.dispatchEvent(new Event("input"));
    expect(state.backgroundBlur).toBeCloseTo(0.8, 12);

    const intensity = bar.querySelector<HTMLInputElement>("input.intensity")!;
    intensity.value = "1.6";
    intensity.dispatchEvent(new Event("input"));
    expect(state.backgroundIntensity).toBeCloseTo(1.6, 12);

    const preset = bar.querySelector<HTMLSelectElement>("select.backdrop-preset")!;
    expect(preset.options).toHaveLength(2);
    preset.value = "warm-stage";
    preset.dispatchEvent(new Event("change"));
    expect(onPresetChange).toHaveBeenCalledWith("warm-stage");
  });

  it("maps mouse gestures to orbit and zoom when unlocked", () => {
    const pose: CameraPoseRecord = {
      position: [0, 1.6, 3],
      lookAt: [0, 1.6, 0],
      fovVertical: 40,
      roll: 0,
    };
    const state = new ViewportState();
    state.setServerPose(structuredClone(pose));
    state.setLocked(false);
    const canvas = document.createElement("canvas");
    const requestRender = vi.fn();
    attachCameraControls(canvas, state, requestRender);

    canvas.dispatchEvent(new MouseEvent("mousedown", { button: 2, clientX: 100, clientY: 100 }));
    canvas.dispatchEvent(new MouseEvent("mousemove", { clientX: 140, clientY: 90 }));
    canvas.dispatchEvent(new MouseEvent("mouseup"));
    expect(state.pose!.position).not.toEqual(pose.position);
    expect(requestRender).toHaveBeenCalled();

    const before = state.pose!.position.slice();
    canvas.dispatchEvent(new WheelEvent("wheel", { deltaY: 120, cancelable: true }));
    expect(state.pose!.position).not.toEqual(before);
  });

  it("leaves the pose untouched by gestures while locked", () => {
    const pose: CameraPoseRecord = {
      position: [0, 1.6, 3],
      lookAt: [0, 1.6, 0],
      fovVertical: 40,
      roll: 0,
    };
    const state = new ViewportState();
    state.setServerPose(structuredClone(pose));
    const canvas = document.createElement("canvas");
    attachCameraControls(canvas, state, () => {});

    canvas.dispatchEvent(new MouseEvent("mousedown", { button: 2, clientX: 10, clientY: 10 }));
    canvas.dispatchEvent(new MouseEvent("mousemove", { clientX: 60, clientY: 40 }));
    canvas.dispatchEvent(new WheelEvent("wheel", { deltaY: 300, cancelable: true }));
    expect(state.pose).toStrictEqual(pose);
  });
});
