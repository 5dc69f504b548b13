// Controlled vocabularies, mirroring the service's validation lists.

export const STYLES = [
  "Agreement",
  "Angry",
  "Disagreement",
  "Distracted",
  "Flirty",
  "Happy",
  "Laughing",
  "Oration",
  "Neutral",
  "Old",
  "Pensive",
  "Relaxed",
  "Sad",
  "Sarcastic",
  "Scared",
  "Sneaky",
  "Still",
  "Threatening",
  "Tired",
] as const;

export const SHOT_TYPES = ["Close-up", "Medium shot", "Long shot"] as const;
export const SHOT_ANGLES = ["Eye level", "High angle", "Low angle"] as const;
