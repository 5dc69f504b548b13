from ..kinematics.clip import MotionClip
from .adapter import (
    ExternalAdapter,
    GestureAdapter,
    ProceduralAdapter,
    gesture_adapter,
    make_gesture_adapter,
)
from .features import Envelope, OnsetList, compute_envelope, detect_onsets
from .gestures import FPS, frame_count, synthesize_gestures
from .styles import STYLE_TABLE, StyleParams, style_params

__all__ = [
    "MotionClip",
    "ExternalAdapter",
    "GestureAdapter",
    "ProceduralAdapter",
    "gesture_adapter",
    "make_gesture_adapter",
    "Envelope",
    "OnsetList",
    "compute_envelope",
    "detect_onsets",
    "FPS",
    "frame_count",
    "synthesize_gestures",
    "STYLE_TABLE",
    "StyleParams",
    "style_params",
]
