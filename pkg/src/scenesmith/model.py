"""Shared domain types: scripts, annotated lines, summaries, scene bundles.

Serialized field names are a fixed contract (id, text, speech, style,
emotionAnalysis, shotType, shotAngle, shotAnalysis for lines; title,
synopsis for summaries) and must never be renamed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace

from .errors import (
    EmptyField,
    LineValidationError,
    MissingField,
    NoDialogueFound,
    UnknownAngle,
    UnknownShot,
    UnknownStyle,
)
from .vocab import check_angle, check_shot, check_style

# Serialized line field order is the appendix contract.
LINE_FIELDS = (
    "id",
    "text",
    "speech",
    "style",
    "emotionAnalysis",
    "shotType",
    "shotAngle",
    "shotAnalysis",
)

LINE_STATES = ("pending", "audio_ready", "complete", "failed")


@dataclass(frozen=True)
class RawScript:
    """Full user script: dialogue lines plus optional free-form context prose."""

    text: str
    source_name: str | None = None

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError("script text is empty")


@dataclass(frozen=True)
class DialogueLine:
    """One parsed `Name: utterance` line, pre-annotation."""

    speaker: str
    utterance: str


@dataclass(frozen=True)
class ParsedScript:
    lines: tuple[DialogueLine, ...]
    context_prose: str

    @property
    def speakers(self) -> list[str]:
        """Unique speaker ids in order of first appearance (case-sensitive)."""
        seen: list[str] = []
        for ln in self.lines:
            if ln.speaker not in seen:
                seen.append(ln.speaker)
        return seen


# Speaker grammar: `Name:` at line start; name up to 40 chars, no colon,
# with one optional parenthetical aside directly before the colon.
_SPEAKER_RE = re.compile(r"^(?P<name>[^:\n]{1,40}?)(?:\((?P<aside>[^()]*)\))?\s*:\s*(?P<utt>.*)$")


def parse_speaker_lines(script: RawScript) -> ParsedScript:
    """Split a script into dialogue pairs and surrounding context prose.

    The parenthetical aside is stripped from the speaker id and appended to
    that line's text; prose lines are concatenated in order.  Raises
    NoDialogueFound when no `Name: utterance` line exists.
    """
    dialogue: list[DialogueLine] = []
    prose: list[str] = []
    for raw_line in script.text.splitlines():
        if not raw_line.strip():
            continue
        m = _SPEAKER_RE.match(raw_line)
        if m and m.group("name").strip() and m.group("utt").strip():
            speaker = m.group("name").strip()
            text = m.group("utt").strip()
            aside = (m.group("aside") or "").strip()
            if aside:
                text = f"{text} ({aside})"
            dialogue.append(DialogueLine(speaker, text))
        else:
            prose.append(raw_line.strip())
    if not dialogue:
        raise NoDialogueFound("no dialogue lines of the form 'Name: utterance' found")
    return ParsedScript(tuple(dialogue), "\n".join(prose))


@dataclass(frozen=True)
class AnnotatedLine:
    """One dialogue card: who speaks, what is said, how it is staged."""

    index: int
    id: str
    text: str
    speech: str
    style: str
    emotion_analysis: str
    shot_type: str
    shot_angle: str
    shot_analysis: str

    def with_updates(self, **kw) -> "AnnotatedLine":
        return replace(self, **kw)

    def to_record(self) -> dict:
        """Serialized form with the exact contract field names, in order."""
        return {
            "id": self.id,
            "text": self.text,
            "speech": self.speech,
            "style": self.style,
            "emotionAnalysis": self.emotion_analysis,
            "shotType": self.shot_type,
            "shotAngle": self.shot_angle,
            "shotAnalysis": self.shot_analysis,
        }


def validate_line(candidate: dict, index: int = 0) -> AnnotatedLine:
    """Build a typed AnnotatedLine from a loosely-typed record.

    All eight contract fields must be present; style/shotType/shotAngle must
    be vocabulary members.  Every violation is reported: a single violation
    raises its specific error (MissingField, UnknownStyle, ...), several
    raise a LineValidationError aggregating all of them.
    """
    violations: list[LineValidationError] = []
    if not isinstance(candidate, dict):
        raise LineValidationError([MissingField(name) for name in LINE_FIELDS])
    values: dict[str, str] = {}
    for name in LINE_FIELDS:
        if name not in candidate:
            violations.append(MissingField(name))
            continue
        value = candidate[name]
        if not isinstance(value, str):
            value = "" if value is None else str(value)
        values[name] = value

    for name in ("id", "text", "speech"):
        if name in values and not values[name].strip():
            violations.append(EmptyField(name))
    if "style" in values:
        try:
            check_style(values["style"])
        except UnknownStyle as e:
            violations.append(e)
    if "shotType" in values:
        try:
            check_shot(values["shotType"])
        except UnknownShot as e:
            violations.append(e)
    if "shotAngle" in values:
        try:
            check_angle(values["shotAngle"])
        except UnknownAngle as e:
            violations.append(e)

    if len(violations) == 1:
        raise violations[0]
    if violations:
        raise LineValidationError(violations)

    return AnnotatedLine(
        index=index,
        id=values["id"],
        text=values["text"],
        speech=values["speech"],
        style=values["style"],
        emotion_analysis=values["emotionAnalysis"],
        shot_type=values["shotType"],
        shot_angle=values["shotAngle"],
        shot_analysis=values["shotAnalysis"],
    )


@dataclass(frozen=True)
class SceneSummary:
    title: str
    synopsis: str

    def __post_init__(self):
        if not self.title.strip():
            raise ValueError("summary title is empty")
        if not self.synopsis.strip():
            raise ValueError("summary synopsis is empty")

    def to_record(self) -> dict:
        return {"title": self.title, "synopsis": self.synopsis}


@dataclass(frozen=True)
class CastEntry:
    voice_id: str
    model_id: str


class CastAssignment(dict):
    """speaker id -> CastEntry; every speaker in the scene needs one entry."""

    @classmethod
    def from_record(cls, record: dict) -> "CastAssignment":
        cast = cls()
        for speaker, entry in record.items():
            cast[speaker] = CastEntry(str(entry["voiceId"]), str(entry["modelId"]))
        return cast

    def to_record(self) -> dict:
        return {
            speaker: {"voiceId": entry.voice_id, "modelId": entry.model_id}
            for speaker, entry in self.items()
        }

    def missing_speakers(self, speakers: list[str]) -> list[str]:
        return [s for s in speakers if s not in self]


@dataclass
class LineStatus:
    state: str = "pending"
    reason: str | None = None

    def __post_init__(self):
        if self.state not in LINE_STATES:
            raise ValueError(f"unknown line state {self.state!r}")

    def to_record(self) -> dict:
        rec: dict = {"state": self.state}
        if self.state == "failed":
            rec["reason"] = self.reason or "unknown"
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "LineStatus":
        return cls(state=rec["state"], reason=rec.get("reason"))


@dataclass
class SceneBundle:
    """A persisted scene: annotation plus per-line generated assets.

    The scene id is the bundle directory name on disk and deliberately not
    part of scene.json, so identical inputs serialize identically.
    """

    scene_id: str
    summary: SceneSummary
    lines: list[AnnotatedLine]
    cast: CastAssignment
    status: list[LineStatus] = field(default_factory=list)

    def __post_init__(self):
        if not self.status:
            self.status = [LineStatus() for _ in self.lines]
        if len(self.status) != len(self.lines):
            raise ValueError("status length must equal lines length")

    def to_record(self) -> dict:
        return {
            "summary": self.summary.to_record(),
            "lines": [line.to_record() for line in self.lines],
            "cast": self.cast.to_record(),
            "status": [s.to_record() for s in self.status],
        }

    @classmethod
    def from_record(cls, scene_id: str, record: dict) -> "SceneBundle":
        lines = [validate_line(rec, index=i) for i, rec in enumerate(record["lines"])]
        return cls(
            scene_id=scene_id,
            summary=SceneSummary(**record["summary"]),
            lines=lines,
            cast=CastAssignment.from_record(record["cast"]),
            status=[LineStatus.from_record(rec) for rec in record["status"]],
        )


# --- canonical JSON encoding -------------------------------------------------
# One formatting used everywhere so encode(decode(x)) round-trips byte-for-byte.

def encode_json(record) -> str:
    return json.dumps(record, indent=2, ensure_ascii=False) + "\n"


def decode_json(text: str):
    return json.loads(text)


def encode_line(line: AnnotatedLine) -> str:
    return encode_json(line.to_record())


def decode_line(text: str, index: int = 0) -> AnnotatedLine:
    return validate_line(decode_json(text), index=index)


def encode_summary(summary: SceneSummary) -> str:
    return encode_json(summary.to_record())


def decode_summary(text: str) -> SceneSummary:
    record = decode_json(text)
    return SceneSummary(title=record["title"], synopsis=record["synopsis"])


def encode_bundle(bundle: SceneBundle) -> str:
    return encode_json(bundle.to_record())


def decode_bundle(scene_id: str, text: str) -> SceneBundle:
    return SceneBundle.from_record(scene_id, decode_json(text))
