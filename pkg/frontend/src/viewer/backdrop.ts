// Bundled backdrop presets: small generated equirectangular gradients,
// rendered to an offscreen canvas so no binary assets ship with the app.

export interface BackdropPreset {
  id: string;
  label: string;
  stops: Array<[number, string]>;
}

export const BACKDROP_PRESETS: BackdropPreset[] = [
  {
    id: "studio-dusk",
    label: "Studio dusk",
    stops: [
      [0, "#2b3a5c"],
      [0.55, "#46557a"],
      [0.62, "#8a774f"],
      [1, "#191410"],
    ],
  },
  {
    id: "warm-stage",
    label: "Warm stage",
    stops: [
      [0, "#4a2d3a"],
      [0.5, "#7a4a3c"],
      [0.6, "#caa36b"],
      [1, "#241a12"],
    ],
  },
];

export function buildBackdropImage(
  doc: Document,
  preset: BackdropPreset,
  width = 512,
  height = 256,
): CanvasImageSource | null {
  const canvas = doc.createElement("canvas");
  canvas.width = width;
  canvas.height = height;
  const ctx = canvas.getContext("2d");
  if (!ctx) return null; // headless test DOM has no 2D context
  const gradient = ctx.createLinearGradient(0, 0, 0, height);
  for (const [at, color] of preset.stops) gradient.addColorStop(at, color);
  ctx.fillStyle = gradient;
  ctx.fillRect(0, 0, width, height);
  return canvas;
}
