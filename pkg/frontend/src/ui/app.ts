// Application shell: scene list, script pane, card timeline, viewport.

import { ApiClient } from "../api/client.js";
import type { SceneListItem } from "../api/types.js";
import { CardsController } from "../state/cards.js";
import { GenerateFlow } from "../state/generate.js";
import { renderTimeline } from "./cards.js";
import { renderModal } from "./modal.js";

export function scriptTextFrom(controller: CardsController): string {
  if (!controller.scene) return "";
  return controller.scene.lines.map((l) => `${l.id}: ${l.text}`).join("\n");
}

export function renderSceneList(
  doc: Document,
  container: HTMLElement,
  scenes: SceneListItem[],
  onOpen: (sceneId: string) => void,
): void {
  container.textContent = "";
  if (scenes.length === 0) {
    const empty = doc.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No scenes yet. Write a script and press Synthesis.";
    container.appendChild(empty);
    return;
  }
  for (const scene of scenes) {
    const item = doc.createElement("button");
    item.className = "scene-item";
    item.dataset.sceneId = scene.sceneId;
    item.textContent = `${scene.title} (${scene.createdAt})`;
    item.addEventListener("click", () => onOpen(scene.sceneId));
    container.appendChild(item);
  }
}

export interface AppHandlers {
  onPlay(index: number): void;
  onOpenScene(sceneId: string): void;
}

export class StudioApp {
  readonly cards: CardsController;
  flow: GenerateFlow | null = null;

  constructor(
    readonly doc: Document,
    readonly client: ApiClient,
    private readonly handlers: AppHandlers,
  ) {
    this.cards = new CardsController(client);
  }

  async refreshSceneList(container: HTMLElement): Promise<void> {
    const scenes = await this.client.listScenes();
    renderSceneList(this.doc, container, scenes, (id) => this.handlers.onOpenScene(id));
  }

  renderCards(container: HTMLElement): void {
    renderTimeline(this.doc, container, this.cards.cards, {
      onPlay: (i) => this.handlers.onPlay(i),
      onStyle: (i, style) => void this.cards.edit(i, { style }),
      onSpeech: (i, speech) => void this.cards.edit(i, { speech }),
    });
  }

  openGenerateModal(host: HTMLElement, onDone: () => void): GenerateFlow {
    const flow = new GenerateFlow(this.client, (sceneId) => this.handlers.onOpenScene(sceneId));
    this.flow = flow;
    const paint = () => {
      host.textContent = "";
      host.appendChild(
        renderModal(this.doc, flow, () => {
          host.textContent = "";
          this.flow = null;
          onDone();
        }),
      );
    };
    flow.changed.subscribe(paint);
    void flow.loadCatalogs();
    paint();
    return flow;
  }
}
