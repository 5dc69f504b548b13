"""Annotation orchestration: prompt, validate, repair once, then salvage.

A provider response is never trusted: the JSON payload is extracted from
whatever prose or fencing surrounds it, every record is checked against
the parsed script (ids and text must match; style and staging must be
vocabulary members), and one repair round-trip quotes the exact problems
back to the provider.  Whatever is still invalid after that is salvaged
field by field, substituting safe defaults and recording a warning per
substitution, so annotation as a whole never hard-fails once a script
has parsable dialogue.
"""

from __future__ import annotations

import json

from ..errors import (
    ProviderTimeout,
    ProviderUnavailable,
    ScenesmithError,
    UnparseableResponse,
)
from ..model import (
    AnnotatedLine,
    ParsedScript,
    RawScript,
    SceneSummary,
    encode_line,
    parse_speaker_lines,
    validate_line,
)
from ..vocab import SHOT_ANGLES, SHOT_TYPES, STYLES, check_style
from .heuristics import classify_style, fallback_record, fallback_summary
from .prompts import build_parse_prompt, build_regen_prompt, build_summary_prompt
from .providers import LLMProvider


def _extract_balanced(text: str, open_ch: str, close_ch: str):
    start = text.find(open_ch)
    while start != -1:
        depth = 0
        in_str = False
        esc = False
        for i in range(start, len(text)):
            c = text[i]
            if in_str:
                if esc:
                    esc = False
                elif c == "\\":
                    esc = True
                elif c == '"':
                    in_str = False
            elif c == '"':
                in_str = True
            elif c == open_ch:
                depth += 1
            elif c == close_ch:
                depth -= 1
                if depth == 0:
                    try:
                        return json.loads(text[start : i + 1])
                    except json.JSONDecodeError:
                        break
        start = text.find(open_ch, start + 1)
    raise UnparseableResponse(f"no valid JSON {open_ch}...{close_ch} payload in response")


def extract_json_array(text: str) -> list:
    value = _extract_balanced(text, "[", "]")
    if not isinstance(value, list):
        raise UnparseableResponse("expected a JSON array")
    return value


def extract_json_object(text: str) -> dict:
    value = _extract_balanced(text, "{", "}")
    if not isinstance(value, dict):
        raise UnparseableResponse("expected a JSON object")
    return value


def validate_records(records, parsed: ParsedScript) -> list[str]:
    """All the reasons `records` cannot be accepted as-is (empty = valid)."""
    if not isinstance(records, list):
        return ["response is not a JSON array"]
    problems: list[str] = []
    if len(records) != len(parsed.lines):
        problems.append(
            f"script has {len(parsed.lines)} dialogue lines, response has {len(records)}"
        )
    for i, (rec, line) in enumerate(zip(records, parsed.lines)):
        try:
            validate_line(rec, index=i)
        except ScenesmithError as e:
            problems.append(f"line {i}: {e}")
            continue
        if rec["id"] != line.speaker:
            problems.append(f"line {i}: id {rec['id']!r} does not match speaker {line.speaker!r}")
        if rec["text"] != line.utterance:
            problems.append(f"line {i}: text was altered from the script")
    return problems


def _salvage_line(
    index: int, speaker: str, utterance: str, candidate, warnings: list[str]
) -> AnnotatedLine:
    base = fallback_record(speaker, utterance)
    if not isinstance(candidate, dict):
        warnings.append(f"line {index}: no usable record; used rule-based annotation")
        candidate = {}

    def good_str(key):
        v = candidate.get(key)
        return v if isinstance(v, str) and v.strip() else None

    notes: list[str] = []
    speech = good_str("speech") or base["speech"]
    emotion = good_str("emotionAnalysis") or base["emotionAnalysis"]
    shot_note = good_str("shotAnalysis") or base["shotAnalysis"]

    style = candidate.get("style")
    if style not in STYLES:
        if style is not None:
            notes.append(f"style {style!r} not in vocabulary; substituted {base['style']}")
        style = base["style"]
    shot = candidate.get("shotType")
    if shot not in SHOT_TYPES:
        if shot is not None:
            notes.append(f"shotType {shot!r} not in vocabulary; substituted Medium shot")
        shot = "Medium shot"
    angle = candidate.get("shotAngle")
    if angle not in SHOT_ANGLES:
        if angle is not None:
            notes.append(f"shotAngle {angle!r} not in vocabulary; substituted Eye level")
        angle = "Eye level"

    for note in notes:
        warnings.append(f"line {index}: {note}")
    if notes:
        emotion = f"{emotion} [{'; '.join(notes)}]"

    return AnnotatedLine(
        index=index,
        id=speaker,
        text=utterance,
        speech=speech,
        style=style,
        emotion_analysis=emotion,
        shot_type=shot,
        shot_angle=angle,
        shot_analysis=shot_note,
    )


def _records_to_lines(records: list, parsed: ParsedScript) -> list[AnnotatedLine]:
    return [validate_line(rec, index=i) for i, rec in enumerate(records)]


def annotate_script(
    script: RawScript, provider: LLMProvider
) -> tuple[list[AnnotatedLine], list[str]]:
    """Annotate every dialogue line; returns (lines, warnings)."""
    parsed = parse_speaker_lines(script)
    prompt = build_parse_prompt(script.text)
    warnings: list[str] = []

    try:
        response = provider.complete(prompt)
    except (ProviderUnavailable, ProviderTimeout) as e:
        warnings.append(f"annotation provider unavailable ({e}); used rule-based annotation")
        return [
            _salvage_line(i, ln.speaker, ln.utterance, None, [])
            for i, ln in enumerate(parsed.lines)
        ], warnings

    records: list = []
    try:
        records = extract_json_array(response)
        problems = validate_records(records, parsed)
    except UnparseableResponse as e:
        problems = [str(e)]

    if problems:
        repair_prompt = (
            f"{prompt}\n\nYour previous response could not be used:\n"
            + "\n".join(f"- {p}" for p in problems)
            + "\nReturn ONLY the corrected JSON array."
        )
        try:
            response = provider.complete(repair_prompt)
            records = extract_json_array(response)
            problems = validate_records(records, parsed)
        except (ProviderUnavailable, ProviderTimeout, UnparseableResponse) as e:
            problems = problems + [f"repair attempt failed: {e}"]

    if not problems:
        return _records_to_lines(records, parsed), warnings

    warnings.extend(f"annotation rejected: {p}" for p in problems)
    lines = []
    for i, ln in enumerate(parsed.lines):
        candidate = records[i] if i < len(records) else None
        lines.append(_salvage_line(i, ln.speaker, ln.utterance, candidate, warnings))
    return lines, warnings


def summarize_script(
    script: RawScript, provider: LLMProvider
) -> tuple[SceneSummary, list[str]]:
    parsed = parse_speaker_lines(script)
    prompt = build_summary_prompt(script.text)
    warnings: list[str] = []

    def try_once(p: str) -> SceneSummary | None:
        record = extract_json_object(provider.complete(p))
        title, synopsis = record.get("title"), record.get("synopsis")
        if isinstance(title, str) and title.strip() and isinstance(synopsis, str) and synopsis.strip():
            return SceneSummary(title=title, synopsis=synopsis)
        return None

    try:
        summary = try_once(prompt)
        if summary is not None:
            return summary, warnings
        repair = (
            f"{prompt}\nYour previous response was missing a non-empty title or synopsis. "
            "Return ONLY the JSON object."
        )
        summary = try_once(repair)
        if summary is not None:
            warnings.append("summary needed one repair round-trip")
            return summary, warnings
        warnings.append("summary response unusable twice; used rule-based summary")
    except (ProviderUnavailable, ProviderTimeout, UnparseableResponse) as e:
        warnings.append(f"summary provider failed ({e}); used rule-based summary")
    return fallback_summary(parsed), warnings


def regenerate_line(
    line: AnnotatedLine, new_style: str, script_text: str, provider: LLMProvider
) -> AnnotatedLine:
    """Re-voice one line for a new gesture style.

    Only speech, emotionAnalysis, and shotAnalysis may move; id, text, and
    the shot plan are pinned, and the style becomes `new_style` no matter
    what the provider returns.
    """
    check_style(new_style)
    prompt = build_regen_prompt(encode_line(line), new_style, script_text)
    candidate: dict = {}
    try:
        candidate = extract_json_object(provider.complete(prompt))
    except (ProviderUnavailable, ProviderTimeout, UnparseableResponse):
        candidate = {}

    def good_str(key, default):
        v = candidate.get(key)
        return v if isinstance(v, str) and v.strip() else default

    _, default_reason = classify_style(line.text)
    return line.with_updates(
        style=new_style,
        speech=good_str("speech", line.speech),
        emotion_analysis=good_str(
            "emotionAnalysis", f"Style changed to {new_style}. {default_reason}"
        ),
        shot_analysis=good_str("shotAnalysis", line.shot_analysis),
    )
