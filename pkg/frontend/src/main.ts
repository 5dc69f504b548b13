// Wires the studio together in a real browser: API client, card timeline,
// playback engine slaved to an <audio> element, and the canvas viewport.

import { ApiClient } from "./api/client.js";
import { parseBvh } from "./bvh/parse.js";
import { PlaybackEngine, type LineAssets } from "./playback/engine.js";
import { scriptTextFrom, StudioApp } from "./ui/app.js";
import { attachCameraControls, renderViewportControls } from "./ui/viewport.js";
import { ViewportState } from "./viewer/camera.js";
import { BACKDROP_PRESETS, buildBackdropImage } from "./viewer/backdrop.js";
import { renderScene, type CharacterSnapshot, type Ctx2D } from "./viewer/renderer.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const apiBase = localStorage.getItem("apiBase") ?? "";
const client = new ApiClient(apiBase);

const viewport = new ViewportState();
const canvas = el<HTMLCanvasElement>("viewport-canvas");
const ctx = canvas.getContext("2d") as unknown as Ctx2D | null;
let backdropImage = buildBackdropImage(document, BACKDROP_PRESETS[0]!);

// one snapshot per character; the active speaker animates, the rest hold pose
const snapshots = new Map<string, CharacterSnapshot>();
const placements = new Map<string, number>();

function paint(): void {
  if (!ctx) return;
  canvas.width = canvas.clientWidth || 960;
  canvas.height = canvas.clientHeight || 540;
  renderScene(ctx, viewport.pose, [...snapshots.values()], {
    image: backdropImage,
    blur: viewport.backgroundBlur,
    intensity: viewport.backgroundIntensity,
  });
}

const audio = new Audio();
const assetCache = new Map<number, LineAssets>();

async function loadAssets(index: number): Promise<LineAssets> {
  const cached = assetCache.get(index);
  if (cached) return cached;
  const sceneId = app.cards.sceneId!;
  const [motionText, camera] = await Promise.all([
    client.getMotionText(sceneId, index),
    client.getCamera(sceneId, index),
  ]);
  const assets: LineAssets = {
    clip: parseBvh(motionText),
    camera,
    audioUrl: client.audioUrl(sceneId, index),
  };
  assetCache.set(index, assets);
  return assets;
}

const engine = new PlaybackEngine(audio, loadAssets, {
  onLineStart: (index) => {
    app.cards.setPlaying(index, true);
    refreshTimeline();
  },
  onLineEnd: (index) => {
    app.cards.setPlaying(index, false);
    refreshTimeline();
  },
  onCamera: (index, pose) => {
    viewport.setServerPose(pose);
    const line = app.cards.scene?.lines[index];
    // the camera frames the speaker, so lookAt.x is their stage spot
    if (line) placements.set(line.id, pose.lookAt[0]);
  },
  onFrame: (index, frame, clip) => {
    const line = app.cards.scene?.lines[index];
    if (!line) return;
    const snapshot = snapshots.get(line.id) ?? {
      speaker: line.id,
      clip,
      frame,
      offsetX: placements.get(line.id) ?? 0,
      offsetZ: 0,
      active: true,
    };
    snapshot.clip = clip;
    snapshot.frame = frame;
    snapshot.offsetX = placements.get(line.id) ?? snapshot.offsetX;
    snapshots.set(line.id, snapshot);
    for (const [speaker, snap] of snapshots) snap.active = speaker === line.id;
  },
  onIdle: () => {
    refreshTimeline();
  },
});

const app = new StudioApp(document, client, {
  onPlay: (index) => {
    const card = app.cards.cards[index];
    if (card?.playState === "playing") engine.stop();
    else void engine.playLine(index);
  },
  onOpenScene: (sceneId) => void openScene(sceneId),
});

function refreshTimeline(): void {
  app.renderCards(el("timeline"));
}

async function openScene(sceneId: string): Promise<void> {
  assetCache.clear();
  snapshots.clear();
  placements.clear();
  engine.stop();
  await app.cards.open(sceneId);
  el("scene-title").textContent = app.cards.scene?.summary.title ?? "";
  el("scene-synopsis").textContent = app.cards.scene?.summary.synopsis ?? "";
  (el<HTMLTextAreaElement>("script-editor")).value = scriptTextFrom(app.cards);
  refreshTimeline();
}

app.cards.changed.subscribe(() => {
  assetCache.clear(); // regenerated assets must be refetched
  refreshTimeline();
});

el("play-scene").addEventListener("click", () => {
  const playable = app.cards.cards
    .map((card, i) => ({ card, i }))
    .filter(({ card }) => card.status.state === "complete")
    .map(({ i }) => i);
  void engine.playScene(playable);
});
el("pause").addEventListener("click", () => {
  if (engine.status === "playing") engine.pause();
  else if (engine.status === "paused") engine.resume();
});
el("generate-all").addEventListener("click", () => void app.cards.generateAll());
el("new-scene").addEventListener("click", () => {
  app.openGenerateModal(el("modal-host"), () => void app.refreshSceneList(el("scene-list")));
});

const apiInput = el<HTMLInputElement>("api-base");
apiInput.value = apiBase;
apiInput.addEventListener("change", () => {
  localStorage.setItem("apiBase", apiInput.value.trim());
  location.reload();
});

el("viewport-bar").appendChild(
  renderViewportControls(document, viewport, {
    onLockChange: () => paint(),
    onPresetChange: (id) => {
      const preset = BACKDROP_PRESETS.find((p) => p.id === id) ?? BACKDROP_PRESETS[0]!;
      backdropImage = buildBackdropImage(document, preset);
      paint();
    },
    requestRender: paint,
  }),
);
attachCameraControls(canvas, viewport, paint);

function frameLoop(): void {
  engine.tick();
  paint();
  requestAnimationFrame(frameLoop);
}
requestAnimationFrame(frameLoop);

void app.refreshSceneList(el("scene-list"));
