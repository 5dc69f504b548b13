"""Scriptwriting studio: dialogue scripts in, synchronized audiovisual scenes out."""

from .errors import ScenesmithError
from .model import (
    AnnotatedLine,
    CastAssignment,
    CastEntry,
    ParsedScript,
    RawScript,
    SceneBundle,
    SceneSummary,
    parse_speaker_lines,
    validate_line,
)
from .vocab import SHOT_ANGLES, SHOT_TYPES, STYLES

__version__ = "0.1.0"

__all__ = [
    "AnnotatedLine",
    "CastAssignment",
    "CastEntry",
    "ParsedScript",
    "RawScript",
    "SceneBundle",
    "SceneSummary",
    "ScenesmithError",
    "SHOT_ANGLES",
    "SHOT_TYPES",
    "STYLES",
    "parse_speaker_lines",
    "validate_line",
    "__version__",
]
