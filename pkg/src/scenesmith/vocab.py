"""Controlled vocabularies: gesture styles, camera shots, camera angles.

These sets are closed. "Dutch angle" and "Extreme close-up" are deliberately
not members and must be rejected wherever a vocabulary value is checked.
"""

from __future__ import annotations

from .errors import UnknownAngle, UnknownShot, UnknownStyle

STYLES: tuple[str, ...] = (
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
)

SHOT_TYPES: tuple[str, ...] = ("Close-up", "Medium shot", "Long shot")

SHOT_ANGLES: tuple[str, ...] = ("Eye level", "High angle", "Low angle")

_STYLE_SET = frozenset(STYLES)
_SHOT_SET = frozenset(SHOT_TYPES)
_ANGLE_SET = frozenset(SHOT_ANGLES)

assert len(STYLES) == 19
assert len(SHOT_TYPES) == 3 and len(SHOT_ANGLES) == 3


def check_style(name: object) -> str:
    if name not in _STYLE_SET:
        raise UnknownStyle(name)
    return name  # type: ignore[return-value]


def check_shot(name: object) -> str:
    if name not in _SHOT_SET:
        raise UnknownShot(name)
    return name  # type: ignore[return-value]


def check_angle(name: object) -> str:
    if name not in _ANGLE_SET:
        raise UnknownAngle(name)
    return name  # type: ignore[return-value]
