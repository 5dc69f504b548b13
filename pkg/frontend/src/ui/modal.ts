// Generate modal: script entry, detected speakers with voice/character
// pickers, then per-line progress as the job runs.

import type { GenerateFlow } from "../state/generate.js";

export function renderModal(doc: Document, flow: GenerateFlow, onClose: () => void): HTMLElement {
  const overlay = doc.createElement("div");
  overlay.className = "modal-overlay";
  const modal = doc.createElement("div");
  modal.className = "modal";
  overlay.appendChild(modal);

  const heading = doc.createElement("h2");
  heading.textContent = flow.title ?? "New scene";
  modal.appendChild(heading);
  if (flow.synopsis) {
    const logline = doc.createElement("p");
    logline.className = "logline";
    logline.textContent = flow.synopsis;
    modal.appendChild(logline);
  }
  for (const warning of flow.warnings) {
    const w = doc.createElement("p");
    w.className = "warning";
    w.textContent = warning;
    modal.appendChild(w);
  }

  if (flow.phase === "editing") {
    const script = doc.createElement("textarea");
    script.className = "script-input";
    script.placeholder = "Nora: Morning, did the overnight render finish?";
    script.rows = 8;
    script.value = flow.script;
    script.addEventListener("input", () => flow.setScript(script.value));
    modal.appendChild(script);

    const pickers = doc.createElement("div");
    pickers.className = "pickers";
    for (const speaker of flow.speakers) {
      const row = doc.createElement("div");
      row.className = "picker-row";
      row.dataset.speaker = speaker;

      const name = doc.createElement("span");
      name.textContent = speaker;
      row.appendChild(name);

      const voice = doc.createElement("select");
      voice.className = "voice-pick";
      voice.appendChild(new Option("choose voice...", ""));
      for (const v of flow.voices) {
        voice.appendChild(new Option(v.displayName, v.voiceId));
      }
      voice.value = flow.picks[speaker]?.voiceId ?? "";
      voice.addEventListener("change", () => flow.pick(speaker, "voiceId", voice.value));
      row.appendChild(voice);

      const character = doc.createElement("select");
      character.className = "character-pick";
      character.appendChild(new Option("choose character...", ""));
      for (const c of flow.characters) {
        character.appendChild(new Option(c.displayName, c.characterId));
      }
      character.value = flow.picks[speaker]?.modelId ?? "";
      character.addEventListener("change", () => flow.pick(speaker, "modelId", character.value));
      row.appendChild(character);

      pickers.appendChild(row);
    }
    modal.appendChild(pickers);

    const synthesize = doc.createElement("button");
    synthesize.className = "synthesize";
    synthesize.textContent = "Synthesis";
    synthesize.disabled = !flow.canSynthesize();
    synthesize.addEventListener("click", () => void flow.synthesize());
    modal.appendChild(synthesize);
  } else {
    const progress = doc.createElement("ul");
    progress.className = "progress";
    for (const [index, stage] of Object.entries(flow.progress)) {
      const item = doc.createElement("li");
      item.dataset.index = index;
      const failure = flow.failures[Number(index)];
      item.textContent = failure ? `line ${index}: failed (${failure})` : `line ${index}: ${stage}`;
      if (failure) item.className = "failed";
      progress.appendChild(item);
    }
    modal.appendChild(progress);
    if (flow.error) {
      const err = doc.createElement("p");
      err.className = "warning";
      err.textContent = flow.error;
      modal.appendChild(err);
    }
  }

  const close = doc.createElement("button");
  close.className = "close";
  close.textContent = flow.phase === "done" ? "Open scene" : "Close";
  close.addEventListener("click", onClose);
  modal.appendChild(close);
  return overlay;
}
