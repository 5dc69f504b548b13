"""Per-style gesture parameters.

Amplitudes are radians, durations seconds, sway frequency Hz.  Two
envelope constraints keep every style inside the motion contracts:
stroke_amplitude * energy_gain <= 1.0 rad and stroke_duration >= 0.15 s,
which together bound per-frame rotation change under 15 degrees at 60 fps.
base_posture maps joint name -> (Z, X, Y) degrees applied to every frame.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import UnknownStyle
from ..vocab import STYLES


@dataclass(frozen=True)
class StyleParams:
    stroke_amplitude: float
    stroke_duration: float
    sway_frequency: float
    sway_amplitude: float
    energy_gain: float
    base_posture: dict[str, tuple[float, float, float]] = field(default_factory=dict)

    def __post_init__(self):
        if min(
            self.stroke_amplitude,
            self.stroke_duration,
            self.sway_frequency,
            self.sway_amplitude,
            self.energy_gain,
        ) < 0:
            raise ValueError("style parameters must be non-negative")
        if self.stroke_amplitude * self.energy_gain > 1.0:
            raise ValueError("stroke_amplitude * energy_gain must stay <= 1.0 rad")
        if self.stroke_amplitude > 0 and self.stroke_duration < 0.15:
            raise ValueError("stroke_duration must be >= 0.15 s")


STYLE_TABLE: dict[str, StyleParams] = {
    "Agreement": StyleParams(0.45, 0.30, 0.25, 0.040, 1.00, {"Head": (0, 6, 0)}),
    "Angry": StyleParams(0.95, 0.16, 0.40, 0.060, 1.00, {"Head": (0, -4, 0), "Spine": (0, 3, 0)}),
    "Disagreement": StyleParams(0.55, 0.25, 0.30, 0.050, 0.90, {"Head": (0, 0, 8)}),
    "Distracted": StyleParams(0.30, 0.40, 0.15, 0.070, 0.60, {"Head": (0, 0, 15)}),
    "Flirty": StyleParams(0.50, 0.35, 0.35, 0.080, 0.90, {"Head": (8, 0, 0)}),
    "Happy": StyleParams(0.70, 0.25, 0.45, 0.060, 1.00, {"Head": (0, -3, 0)}),
    "Laughing": StyleParams(0.75, 0.22, 0.55, 0.100, 1.10, {"Spine": (0, 6, 0)}),
    "Oration": StyleParams(0.85, 0.30, 0.20, 0.050, 1.00, {"LeftArm": (12, 0, 0), "RightArm": (-12, 0, 0)}),
    "Neutral": StyleParams(0.40, 0.30, 0.25, 0.040, 0.80, {}),
    "Old": StyleParams(0.25, 0.45, 0.12, 0.030, 0.50, {"Spine": (0, 12, 0), "Neck": (0, 8, 0)}),
    "Pensive": StyleParams(0.30, 0.40, 0.15, 0.040, 0.60, {"Head": (0, 6, -6)}),
    "Relaxed": StyleParams(0.35, 0.38, 0.18, 0.050, 0.70, {}),
    "Sad": StyleParams(0.25, 0.45, 0.12, 0.040, 0.50, {"Head": (0, 10, 0), "Spine": (0, 6, 0)}),
    "Sarcastic": StyleParams(0.55, 0.30, 0.28, 0.050, 0.85, {"Head": (6, 0, 0)}),
    "Scared": StyleParams(0.60, 0.18, 0.50, 0.080, 0.90, {"Spine": (0, -4, 0)}),
    "Sneaky": StyleParams(0.35, 0.30, 0.20, 0.050, 0.70, {"Spine": (0, 8, 0)}),
    "Still": StyleParams(0.0, 0.30, 0.0, 0.0, 0.0, {}),
    "Threatening": StyleParams(0.80, 0.20, 0.30, 0.050, 1.00, {"Spine": (0, 4, 0), "Head": (0, -4, 0)}),
    "Tired": StyleParams(0.22, 0.48, 0.10, 0.030, 0.45, {"Head": (0, 8, 0), "Spine": (0, 8, 0)}),
}

assert set(STYLE_TABLE) == set(STYLES)
assert STYLE_TABLE["Still"].stroke_amplitude == 0.0
assert STYLE_TABLE["Still"].sway_amplitude == 0.0


def style_params(style: str) -> StyleParams:
    try:
        return STYLE_TABLE[style]
    except KeyError:
        raise UnknownStyle(style) from None
