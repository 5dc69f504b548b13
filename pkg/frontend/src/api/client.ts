import type {
  CameraPoseRecord,
  CharacterInfo,
  CreateSceneResponse,
  JobRecord,
  PatchLineResponse,
  SceneListItem,
  SceneRecord,
  VoiceInfo,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed wrapper over the service routes. All methods throw ApiError
 *  with the server's error code on non-2xx responses. */
export class ApiClient {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string = "",
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => globalThis.fetch(input, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchFn(this.baseUrl + path, init);
    if (!res.ok) {
      let code = "unknown";
      let message = `${res.status} on ${path}`;
      try {
        const payload = (await res.json()) as { error?: { code?: string; message?: string } };
        code = payload.error?.code ?? code;
        message = payload.error?.message ?? message;
      } catch {
        // non-JSON error body; keep the fallback message
      }
      throw new ApiError(res.status, code, message);
    }
    return (await res.json()) as T;
  }

  createScene(script: string, cast?: Record<string, { voiceId: string; modelId: string }>, sceneId?: string) {
    const body: Record<string, unknown> = { script };
    if (cast) body.cast = cast;
    if (sceneId) body.sceneId = sceneId;
    return this.request<CreateSceneResponse>("POST", "/api/scenes", body);
  }

  listScenes() {
    return this.request<SceneListItem[]>("GET", "/api/scenes");
  }

  getScene(sceneId: string) {
    return this.request<SceneRecord>("GET", `/api/scenes/${sceneId}`);
  }

  startGeneration(sceneId: string) {
    return this.request<{ jobId: string }>("POST", `/api/scenes/${sceneId}/generate`);
  }

  getJob(jobId: string) {
    return this.request<JobRecord>("GET", `/api/jobs/${jobId}`);
  }

  patchLine(sceneId: string, index: number, patch: { style?: string; speech?: string }) {
    return this.request<PatchLineResponse>("PATCH", `/api/scenes/${sceneId}/lines/${index}`, patch);
  }

  async getCamera(sceneId: string, index: number): Promise<CameraPoseRecord> {
    return this.request<CameraPoseRecord>("GET", `/api/scenes/${sceneId}/lines/${index}/camera`);
  }

  /** BVH text of the retargeted clip. */
  async getMotionText(sceneId: string, index: number): Promise<string> {
    const res = await this.fetchFn(`${this.baseUrl}/api/scenes/${sceneId}/lines/${index}/motion`);
    if (!res.ok) throw new ApiError(res.status, "asset_not_found", `no motion for line ${index}`);
    return res.text();
  }

  /** URL for the <audio> element; playback streams it directly. */
  audioUrl(sceneId: string, index: number): string {
    return `${this.baseUrl}/api/scenes/${sceneId}/lines/${index}/audio`;
  }

  async listVoices(): Promise<VoiceInfo[]> {
    const payload = await this.request<{ voices: VoiceInfo[] }>("GET", "/api/voices");
    return payload.voices;
  }

  async listCharacters(): Promise<CharacterInfo[]> {
    const payload = await this.request<{ characters: CharacterInfo[] }>("GET", "/api/characters");
    return payload.characters;
  }
}
