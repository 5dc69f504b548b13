// Dialogue card state. Edits apply optimistically and stay marked dirty until
// the PATCH round-trip confirms; a second edit while a card regenerates is
// queued, never dropped; a server 409 reverts the card and surfaces the
// conflict. Job progress is polled once per second.

import { ApiClient, ApiError } from "../api/client.js";
import type { JobRecord, LineRecord, LineStage, LineStatus, SceneRecord } from "../api/types.js";
import { Emitter } from "./store.js";

export type PlayState = "idle" | "playing" | "regenerating";

export interface LineEdit {
  style?: string;
  speech?: string;
}

export interface CardViewModel {
  line: LineRecord; // displayed values, possibly optimistic
  confirmed: LineRecord; // last server-confirmed record
  status: LineStatus; // asset readiness
  stage: LineStage | null; // live stage while a job covers this line
  playState: PlayState;
  dirty: boolean;
  queued: LineEdit | null;
  inFlight: boolean;
  error: string | null;
}

export const POLL_INTERVAL_MS = 1000;

export class CardsController {
  readonly changed = new Emitter();
  sceneId: string | null = null;
  scene: SceneRecord | null = null;
  cards: CardViewModel[] = [];
  activeJobId: string | null = null;

  constructor(private readonly client: ApiClient) {}

  async open(sceneId: string): Promise<void> {
    const scene = await this.client.getScene(sceneId);
    this.sceneId = sceneId;
    this.scene = scene;
    this.cards = scene.lines.map((line, i) => ({
      line,
      confirmed: line,
      status: scene.status[i] ?? { state: "pending" },
      stage: null,
      playState: "idle",
      dirty: false,
      queued: null,
      inFlight: false,
      error: null,
    }));
    this.changed.emit();
  }

  /** Invariant: one card per server line, in order. */
  cardCount(): number {
    return this.cards.length;
  }

  setPlaying(index: number, playing: boolean): void {
    const card = this.cards[index];
    if (!card || card.playState === "regenerating") return;
    card.playState = playing ? "playing" : "idle";
    this.changed.emit();
  }

  async edit(index: number, patch: LineEdit): Promise<void> {
    const card = this.cards[index];
    if (!card) throw new RangeError(`no card ${index}`);
    card.line = { ...card.line, ...patch };
    card.dirty = true;
    card.error = null;
    if (card.inFlight || this.activeJobId !== null) {
      // a regeneration is underway somewhere in the scene; hold the edit
      card.queued = { ...card.queued, ...patch };
      this.changed.emit();
      return;
    }
    await this.dispatch(index, patch);
  }

  async generateAll(): Promise<void> {
    if (!this.sceneId) return;
    const { jobId } = await this.client.startGeneration(this.sceneId);
    for (const card of this.cards) card.playState = "regenerating";
    this.watchJob(jobId);
    this.changed.emit();
  }

  private async dispatch(index: number, patch: LineEdit): Promise<void> {
    const card = this.cards[index]!;
    card.inFlight = true;
    card.playState = "regenerating";
    this.changed.emit();
    try {
      const response = await this.client.patchLine(this.sceneId!, index, patch);
      card.line = response.line;
      card.confirmed = response.line;
      card.dirty = card.queued !== null;
      card.status = { state: "pending" };
      this.watchJob(response.jobId);
    } catch (err) {
      card.inFlight = false;
      card.playState = "idle";
      card.line = card.confirmed; // roll the optimistic values back
      card.dirty = card.queued !== null;
      card.error =
        err instanceof ApiError && err.status === 409
          ? "Scene is busy; your edit was reverted. Try again in a moment."
          : err instanceof Error
            ? err.message
            : String(err);
    }
    this.changed.emit();
  }

  private watchJob(jobId: string): void {
    this.activeJobId = jobId;
    const poll = async () => {
      if (this.activeJobId !== jobId) return;
      let job: JobRecord;
      try {
        job = await this.client.getJob(jobId);
      } catch (err) {
        this.activeJobId = null;
        for (const card of this.cards) {
          if (card.inFlight) {
            card.inFlight = false;
            card.playState = "idle";
            card.error = err instanceof Error ? err.message : String(err);
          }
        }
        this.changed.emit();
        return;
      }
      this.applyJob(job);
      if (job.state === "running") {
        setTimeout(() => void poll(), POLL_INTERVAL_MS);
      } else {
        this.activeJobId = null;
        this.changed.emit();
        await this.drainQueue();
      }
      this.changed.emit();
    };
    void poll();
  }

  private applyJob(job: JobRecord): void {
    const settled = job.state !== "running";
    for (const jobLine of job.lines) {
      const card = this.cards[jobLine.index];
      if (!card) continue;
      card.stage = jobLine.stage;
      if (jobLine.stage === "done") {
        card.status = { state: "complete" };
        if (settled) {
          card.playState = "idle";
          card.inFlight = false;
          card.stage = null;
          card.dirty = card.queued !== null;
        }
      } else if (jobLine.stage === "failed") {
        card.status = { state: "failed", reason: jobLine.error ?? "unknown" };
        card.error = jobLine.error ?? "generation failed";
        if (settled) {
          card.playState = "idle";
          card.inFlight = false;
          card.stage = null;
        }
      }
    }
    this.changed.emit();
  }

  private async drainQueue(): Promise<void> {
    const index = this.cards.findIndex((c) => c.queued !== null);
    if (index < 0) return;
    const card = this.cards[index]!;
    const patch = card.queued!;
    card.queued = null;
    card.line = { ...card.line, ...patch };
    card.dirty = true;
    await this.dispatch(index, patch);
  }
}
