// Mirrors of the service's JSON payloads. Field names match the wire format.

export interface LineRecord {
  id: string;
  text: string;
  speech: string;
  style: string;
  emotionAnalysis: string;
  shotType: string;
  shotAngle: string;
  shotAnalysis: string;
}

export interface LineStatus {
  state: "pending" | "complete" | "failed";
  reason?: string;
}

export interface SceneSummary {
  title: string;
  synopsis: string;
}

export interface CastEntry {
  voiceId: string;
  modelId: string;
}

export interface SceneRecord {
  sceneId: string;
  summary: SceneSummary;
  lines: LineRecord[];
  cast: Record<string, CastEntry>;
  status: LineStatus[];
}

export interface SceneListItem {
  sceneId: string;
  title: string;
  createdAt: string;
}

export type LineStage = "pending" | "speech" | "gesture" | "retarget" | "done" | "failed";

export interface JobLine {
  index: number;
  stage: LineStage;
  error?: string;
}

export interface JobRecord {
  jobId: string;
  sceneId: string;
  state: "running" | "done" | "partial" | "failed";
  lines: JobLine[];
}

export interface CameraPoseRecord {
  position: [number, number, number];
  lookAt: [number, number, number];
  fovVertical: number;
  roll: number;
}

export interface VoiceInfo {
  voiceId: string;
  displayName: string;
  provider: string;
}

export interface CharacterInfo {
  characterId: string;
  displayName: string;
  heightCm: number;
}

export interface CreateSceneResponse {
  sceneId: string;
  title: string;
  synopsis: string;
  speakers: string[];
  warnings: string[];
}

export interface PatchLineResponse {
  jobId: string;
  line: LineRecord;
}
