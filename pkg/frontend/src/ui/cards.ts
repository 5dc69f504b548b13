// Timeline of dialogue cards: speaker, style picker, editable speech,
// play/regenerate state, and analysis text on hover.

import type { CardViewModel } from "../state/cards.js";
import { STYLES } from "../vocab.js";

export interface CardHandlers {
  onPlay(index: number): void;
  onStyle(index: number, style: string): void;
  onSpeech(index: number, speech: string): void;
}

function badge(card: CardViewModel): { text: string; kind: string } | null {
  if (card.playState === "regenerating") {
    return { text: card.stage ? `regenerating: ${card.stage}` : "regenerating", kind: "busy" };
  }
  if (card.status.state === "failed") {
    return { text: card.status.reason ?? "failed", kind: "failed" };
  }
  if (card.status.state === "pending") return { text: "not generated", kind: "pending" };
  if (card.dirty) return { text: "saving", kind: "busy" };
  return null;
}

export function renderCard(
  doc: Document,
  card: CardViewModel,
  index: number,
  handlers: CardHandlers,
): HTMLElement {
  const el = doc.createElement("article");
  el.className = `card play-${card.playState}`;
  el.dataset.index = String(index);
  // hover reveals the stored reasoning for the chosen style and shot
  el.title = `${card.line.emotionAnalysis}\n\n${card.line.shotAnalysis}`;

  const head = doc.createElement("header");
  const speaker = doc.createElement("span");
  speaker.className = "speaker";
  speaker.textContent = card.line.id;
  head.appendChild(speaker);

  const shot = doc.createElement("span");
  shot.className = "shot";
  shot.textContent = `${card.line.shotType} / ${card.line.shotAngle}`;
  head.appendChild(shot);

  const style = doc.createElement("select");
  style.className = "style";
  for (const name of STYLES) {
    const opt = doc.createElement("option");
    opt.value = name;
    opt.textContent = name;
    if (name === card.line.style) opt.selected = true;
    style.appendChild(opt);
  }
  style.addEventListener("change", () => handlers.onStyle(index, style.value));
  head.appendChild(style);
  el.appendChild(head);

  const speech = doc.createElement("textarea");
  speech.className = "speech";
  speech.value = card.line.speech;
  speech.rows = 2;
  speech.addEventListener("change", () => {
    if (speech.value.trim() && speech.value !== card.line.speech) {
      handlers.onSpeech(index, speech.value);
    }
  });
  el.appendChild(speech);

  const foot = doc.createElement("footer");
  const play = doc.createElement("button");
  play.className = "play";
  play.textContent = card.playState === "playing" ? "Stop" : "Play";
  play.disabled = card.status.state !== "complete" || card.playState === "regenerating";
  play.addEventListener("click", () => handlers.onPlay(index));
  foot.appendChild(play);

  const state = badge(card);
  if (state) {
    const b = doc.createElement("span");
    b.className = `badge ${state.kind}`;
    b.textContent = state.text;
    foot.appendChild(b);
  }
  if (card.error) {
    const err = doc.createElement("span");
    err.className = "badge conflict";
    err.textContent = card.error;
    foot.appendChild(err);
  }
  el.appendChild(foot);
  return el;
}

export function renderTimeline(
  doc: Document,
  container: HTMLElement,
  cards: CardViewModel[],
  handlers: CardHandlers,
): void {
  container.textContent = "";
  cards.forEach((card, i) => container.appendChild(renderCard(doc, card, i, handlers)));
}
