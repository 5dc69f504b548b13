"""Rule-based annotation used when no language model is reachable.

Deliberately humble: the speech field is the raw utterance (no invented
fillers), staging defaults to medium shot at eye level, and the style
comes from a punctuation-and-lexicon ladder.  Every analysis string names
the rule that fired so downstream readers can tell heuristic output from
model output.
"""

from __future__ import annotations

import re

from ..model import AnnotatedLine, ParsedScript, SceneSummary

NEGATIVE_WORDS = frozenset(
    {
        "angry",
        "awful",
        "damn",
        "furious",
        "hate",
        "insane",
        "never",
        "stupid",
        "terrible",
        "toxic",
        "worst",
    }
)

_WORD_RE = re.compile(r"[a-z']+")

_SHOT_ANALYSIS = "Default coverage: a medium shot at eye level suits dialogue."


def classify_style(utterance: str) -> tuple[str, str]:
    """Punctuation ladder: (! + charged word) > ! > ? > ellipsis > neutral."""
    words = set(_WORD_RE.findall(utterance.lower()))
    if "!" in utterance and words & NEGATIVE_WORDS:
        return "Angry", (
            "Heuristic pick: an exclamation alongside charged wording reads as anger."
        )
    if "!" in utterance:
        return "Happy", "Heuristic pick: an exclamation without charged wording reads as upbeat."
    if "?" in utterance:
        return "Pensive", "Heuristic pick: a question mark reads as wondering."
    if "..." in utterance:
        return "Tired", "Heuristic pick: a trailing ellipsis reads as a weary pause."
    return "Neutral", "Heuristic pick: no strong punctuation cues."


def fallback_record(speaker: str, utterance: str) -> dict:
    style, reason = classify_style(utterance)
    return {
        "id": speaker,
        "text": utterance,
        "speech": utterance,
        "style": style,
        "emotionAnalysis": reason,
        "shotType": "Medium shot",
        "shotAngle": "Eye level",
        "shotAnalysis": _SHOT_ANALYSIS,
    }


def fallback_records(parsed: ParsedScript) -> list[dict]:
    return [fallback_record(ln.speaker, ln.utterance) for ln in parsed.lines]


def fallback_annotate(parsed: ParsedScript) -> list[AnnotatedLine]:
    records = fallback_records(parsed)
    return [
        AnnotatedLine(
            index=i,
            id=r["id"],
            text=r["text"],
            speech=r["speech"],
            style=r["style"],
            emotion_analysis=r["emotionAnalysis"],
            shot_type=r["shotType"],
            shot_angle=r["shotAngle"],
            shot_analysis=r["shotAnalysis"],
        )
        for i, r in enumerate(records)
    ]


def fallback_summary(parsed: ParsedScript) -> SceneSummary:
    first = parsed.lines[0].utterance
    title = " ".join(first.split()[:6]).rstrip(".,!?;:") or "Untitled Scene"
    speakers = parsed.speakers
    if len(speakers) == 1:
        synopsis = f"A monologue by {speakers[0]}."
    elif len(speakers) == 2:
        synopsis = f"A conversation between {speakers[0]} and {speakers[1]}."
    else:
        synopsis = f"A conversation between {', '.join(speakers[:-1])}, and {speakers[-1]}."
    return SceneSummary(title=title, synopsis=synopsis)
