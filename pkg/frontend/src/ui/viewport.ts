// Viewport panel: canvas plus camera lock, backdrop controls, and the
// free-camera mouse mapping (right-drag rotate, wheel zoom, middle-drag pan).

import type { ViewportState } from "../viewer/camera.js";
import { BACKDROP_PRESETS } from "../viewer/backdrop.js";

export interface ViewportHandlers {
  onLockChange(locked: boolean): void;
  onPresetChange(presetId: string): void;
  requestRender(): void;
}

export function renderViewportControls(
  doc: Document,
  state: ViewportState,
  handlers: ViewportHandlers,
): HTMLElement {
  const bar = doc.createElement("div");
  bar.className = "viewport-controls";

  const lockLabel = doc.createElement("label");
  const lock = doc.createElement("input");
  lock.type = "checkbox";
  lock.className = "lock";
  lock.checked = state.locked;
  lock.addEventListener("change", () => {
    state.setLocked(lock.checked);
    handlers.onLockChange(lock.checked);
    handlers.requestRender();
  });
  lockLabel.appendChild(lock);
  lockLabel.appendChild(doc.createTextNode(" lock to shot"));
  bar.appendChild(lockLabel);

  const preset = doc.createElement("select");
  preset.className = "backdrop-preset";
  for (const p of BACKDROP_PRESETS) preset.appendChild(new Option(p.label, p.id));
  preset.addEventListener("change", () => {
    handlers.onPresetChange(preset.value);
    handlers.requestRender();
  });
  bar.appendChild(preset);

  const blurLabel = doc.createElement("label");
  blurLabel.appendChild(doc.createTextNode("blur "));
  const blur = doc.createElement("input");
  blur.type = "range";
  blur.min = "0";
  blur.max = "1";
  blur.step = "0.05";
  blur.value = String(state.backgroundBlur);
  blur.className = "blur";
  blur.addEventListener("input", () => {
    state.setBackgroundBlur(Number(blur.value));
    handlers.requestRender();
  });
  blurLabel.appendChild(blur);
  bar.appendChild(blurLabel);

  const intensityLabel = doc.createElement("label");
  intensityLabel.appendChild(doc.createTextNode("intensity "));
  const intensity = doc.createElement("input");
  intensity.type = "range";
  intensity.min = "0";
  intensity.max = "2";
  intensity.step = "0.05";
  intensity.value = String(state.backgroundIntensity);
  intensity.className = "intensity";
  intensity.addEventListener("input", () => {
    state.setBackgroundIntensity(Number(intensity.value));
    handlers.requestRender();
  });
  intensityLabel.appendChild(intensity);
  bar.appendChild(intensityLabel);

  return bar;
}

export function attachCameraControls(
  canvas: HTMLElement,
  state: ViewportState,
  requestRender: () => void,
): void {
  let dragButton = -1;
  let lastX = 0;
  let lastY = 0;

  canvas.addEventListener("contextmenu", (e) => e.preventDefault());
  canvas.addEventListener("mousedown", (e: MouseEvent) => {
    if (e.button === 2 || e.button === 1) {
      dragButton = e.button;
      lastX = e.clientX;
      lastY = e.clientY;
      e.preventDefault();
    }
  });
  canvas.addEventListener("mousemove", (e: MouseEvent) => {
    if (dragButton < 0) return;
    const dx = e.clientX - lastX;
    const dy = e.clientY - lastY;
    lastX = e.clientX;
    lastY = e.clientY;
    if (dragButton === 2) state.orbit(dx, dy);
    else state.pan(dx, dy);
    requestRender();
  });
  const release = () => {
    dragButton = -1;
  };
  canvas.addEventListener("mouseup", release);
  canvas.addEventListener("mouseleave", release);
  canvas.addEventListener(
    "wheel",
    (e: WheelEvent) => {
      state.zoom(e.deltaY);
      e.preventDefault();
      requestRender();
    },
    { passive: false },
  );
}
