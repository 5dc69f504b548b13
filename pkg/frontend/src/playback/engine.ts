// Playback: the audio element is the clock, the skeleton is slaved to it.
// Scene playback walks the line queue in order, applying each line's camera.

import type { CameraPoseRecord } from "../api/types.js";
import type { BvhClip } from "../bvh/parse.js";
import { frameForTime } from "../bvh/fk.js";

export interface AudioLike {
  currentTime: number;
  src: string;
  paused: boolean;
  play(): Promise<void> | void;
  pause(): void;
  addEventListener(type: string, handler: () => void): void;
  removeEventListener(type: string, handler: () => void): void;
}

export interface LineAssets {
  clip: BvhClip;
  camera: CameraPoseRecord;
  audioUrl: string;
}

export interface PlaybackEvents {
  onLineStart(index: number): void;
  onLineEnd(index: number): void;
  onFrame(index: number, frame: number, clip: BvhClip): void;
  onCamera(index: number, pose: CameraPoseRecord): void;
  onIdle(): void;
}

export type PlaybackStatus = "idle" | "playing" | "paused";

export class PlaybackEngine {
  status: PlaybackStatus = "idle";
  /** worst observed |animation time - audio time| in seconds */
  maxDriftSeconds = 0;

  private current: { index: number; clip: BvhClip } | null = null;
  private queue: number[] = [];
  private lastFrame = -1;
  private readonly onEnded = () => void this.advance();

  constructor(
    private readonly audio: AudioLike,
    private readonly loadAssets: (index: number) => Promise<LineAssets>,
    private readonly events: Partial<PlaybackEvents> = {},
  ) {
    audio.addEventListener("ended", this.onEnded);
  }

  async playLine(index: number): Promise<void> {
    this.queue = [];
    await this.startLine(index);
  }

  /** Play the given lines back to back (scene playback passes all complete lines). */
  async playScene(indices: number[]): Promise<void> {
    if (indices.length === 0) return;
    this.queue = indices.slice(1);
    await this.startLine(indices[0]!);
  }

  pause(): void {
    if (this.status !== "playing") return;
    this.audio.pause();
    this.status = "paused";
  }

  resume(): void {
    if (this.status !== "paused") return;
    void this.audio.play();
    this.status = "playing";
  }

  stop(): void {
    const current = this.current;
    this.queue = [];
    this.current = null;
    this.audio.pause();
    this.status = "idle";
    if (current) this.events.onLineEnd?.(current.index);
    this.events.onIdle?.();
  }

  /** Drive from requestAnimationFrame (or a test loop): sync frame to clock. */
  tick(): void {
    if (this.status !== "playing" || !this.current) return;
    const t = this.audio.currentTime;
    const frame = frameForTime(this.current.clip, t);
    const drift = Math.abs(frame * this.current.clip.frameTime - t);
    if (drift > this.maxDriftSeconds) this.maxDriftSeconds = drift;
    if (frame !== this.lastFrame) {
      this.lastFrame = frame;
      this.events.onFrame?.(this.current.index, frame, this.current.clip);
    }
  }

  dispose(): void {
    this.audio.removeEventListener("ended", this.onEnded);
  }

  private async startLine(index: number): Promise<void> {
    const assets = await this.loadAssets(index);
    if (this.current) this.events.onLineEnd?.(this.current.index);
    this.current = { index, clip: assets.clip };
    this.lastFrame = -1;
    this.events.onCamera?.(index, assets.camera);
    this.events.onLineStart?.(index);
    this.audio.src = assets.audioUrl;
    this.audio.currentTime = 0;
    this.status = "playing";
    await this.audio.play();
  }

  private async advance(): Promise<void> {
    const finished = this.current;
    const next = this.queue.shift();
    if (next === undefined) {
      this.current = null;
      this.status = "idle";
      if (finished) this.events.onLineEnd?.(finished.index);
      this.events.onIdle?.();
      return;
    }
    await this.startLine(next);
  }
}
