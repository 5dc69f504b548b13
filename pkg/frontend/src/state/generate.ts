// Generate modal flow: script in, per-speaker voice and character picks,
// then one create + generate round with per-line progress.

import { ApiClient } from "../api/client.js";
import type { CharacterInfo, JobRecord, LineStage, VoiceInfo } from "../api/types.js";
import { Emitter } from "./store.js";
import { POLL_INTERVAL_MS } from "./cards.js";

// same labeled-line shape the server accepts: `Name: utterance`,
// optional parenthetical aside between the name and the colon
const SPEAKER_RE = /^([^:\n]{1,40}?)(?:\(([^()]*)\))?\s*:\s*(.*)$/;

export function extractSpeakers(script: string): string[] {
  const seen: string[] = [];
  for (const raw of script.split(/\r?\n/)) {
    if (!raw.trim()) continue;
    const m = SPEAKER_RE.exec(raw);
    if (m && m[1]!.trim() && m[3]!.trim()) {
      const name = m[1]!.trim();
      if (!seen.includes(name)) seen.push(name);
    }
  }
  return seen;
}

export interface CastPick {
  voiceId?: string;
  modelId?: string;
}

export type GeneratePhase = "editing" | "creating" | "generating" | "done" | "error";

export class GenerateFlow {
  readonly changed = new Emitter();
  phase: GeneratePhase = "editing";
  script = "";
  speakers: string[] = [];
  picks: Record<string, CastPick> = {};
  voices: VoiceInfo[] = [];
  characters: CharacterInfo[] = [];
  title: string | null = null;
  synopsis: string | null = null;
  warnings: string[] = [];
  sceneId: string | null = null;
  progress: Record<number, LineStage> = {};
  failures: Record<number, string> = {};
  error: string | null = null;

  constructor(
    private readonly client: ApiClient,
    private readonly onSceneReady?: (sceneId: string) => void,
  ) {}

  async loadCatalogs(): Promise<void> {
    [this.voices, this.characters] = await Promise.all([
      this.client.listVoices(),
      this.client.listCharacters(),
    ]);
    this.changed.emit();
  }

  setScript(text: string): void {
    this.script = text;
    this.speakers = extractSpeakers(text);
    for (const s of this.speakers) this.picks[s] = this.picks[s] ?? {};
    this.changed.emit();
  }

  pick(speaker: string, field: "voiceId" | "modelId", value: string): void {
    this.picks[speaker] = { ...this.picks[speaker], [field]: value };
    this.changed.emit();
  }

  /** Synthesis stays disabled until every speaker has a voice and a character. */
  canSynthesize(): boolean {
    return (
      this.phase === "editing" &&
      this.speakers.length > 0 &&
      this.speakers.every((s) => this.picks[s]?.voiceId && this.picks[s]?.modelId)
    );
  }

  async synthesize(): Promise<void> {
    if (!this.canSynthesize()) return;
    this.phase = "creating";
    this.error = null;
    this.changed.emit();
    const cast: Record<string, { voiceId: string; modelId: string }> = {};
    for (const s of this.speakers) {
      cast[s] = { voiceId: this.picks[s]!.voiceId!, modelId: this.picks[s]!.modelId! };
    }
    try {
      const created = await this.client.createScene(this.script, cast);
      this.sceneId = created.sceneId;
      this.title = created.title;
      this.synopsis = created.synopsis;
      this.warnings = created.warnings;
      const { jobId } = await this.client.startGeneration(created.sceneId);
      this.phase = "generating";
      this.changed.emit();
      await this.trackJob(jobId);
    } catch (err) {
      this.phase = "error";
      this.error = err instanceof Error ? err.message : String(err);
      this.changed.emit();
    }
  }

  private async trackJob(jobId: string): Promise<void> {
    for (;;) {
      const job: JobRecord = await this.client.getJob(jobId);
      for (const line of job.lines) {
        this.progress[line.index] = line.stage;
        if (line.stage === "failed") this.failures[line.index] = line.error ?? "failed";
      }
      this.changed.emit();
      if (job.state !== "running") break;
      await new Promise((resolve) => setTimeout(resolve, POLL_INTERVAL_MS));
    }
    this.phase = "done";
    this.changed.emit();
    if (this.sceneId && this.onSceneReady) this.onSceneReady(this.sceneId);
  }
}
