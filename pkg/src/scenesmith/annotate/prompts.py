"""Prompt builders for script annotation, summarization, and line regeneration."""

from __future__ import annotations

from ..model import encode_json
from ..vocab import SHOT_ANGLES, SHOT_TYPES, STYLES

# Stable marker separating instructions from the user script; the local
# deterministic provider relies on it to recover the script from a prompt.
SCRIPT_MARKER = "Here is the script:"

PARSE_EXAMPLE_RECORDS = [
    {
        "id": "Tom",
        "text": "Hello, how are you feeling after your all-nighter?",
        "speech": "Hello! How are you feeling, after the all-nighter?",
        "style": "Happy",
        "emotionAnalysis": (
            "Given the context of Bob just did an all-nighter, "
            "I chose a happy style to indicate Tom is being supportive."
        ),
        "shotType": "Medium shot",
        "shotAngle": "Eye level",
        "shotAnalysis": "A medium shot at eye level is appropriate for a casual greeting.",
    },
    {
        "id": "Bob",
        "text": "I'm doing well, thank you.",
        "speech": "Uh, I'm doing well... thank you.",
        "style": "Tired",
        "emotionAnalysis": (
            "Bob is tired from the all-nighter, "
            "so I chose a tired style to indicate Bob is exhausted."
        ),
        "shotType": "Medium shot",
        "shotAngle": "Eye level",
        "shotAnalysis": "A medium shot at eye level is appropriate for a casual greeting.",
    },
]

SUMMARY_EXAMPLE = {
    "title": "Greeting After an All-Nighter",
    "synopsis": "Two friends greet each other after an all-nighter.",
}

_PARSE_INSTRUCTIONS = f"""Please parse the following script into JSON format. While parsing, adjust the text to sound more natural and conversational based on the context. Additionally, select appropriate gesture styles to accompany each line of the script.
Utilize the context to ADD new filler words, hesitations, and repetitions to the speech.
Designate gesture styles for the style of gesture associated with the speech.
Choose a gesture style from the following list: {", ".join(STYLES)}.

Explain the rationale behind the choice of gesture style for each line of the script.
Please IGNORE non-verbal cues such as facial expressions, body language, and tone of voice, as well as scene description in the script.

Comment on the choice of camera shot and camera angle for each line of script.
Choose from the following camera shots: {", ".join(SHOT_TYPES)} and camera angles: {", ".join(SHOT_ANGLES)}.

For example, given the following script:
Tom: Hello, how are you feeling after your all-nighter?
Bob: I'm doing well, thank you.

The output should be in the following JSON format:
{encode_json(PARSE_EXAMPLE_RECORDS).rstrip()}"""


def build_parse_prompt(script_text: str) -> str:
    return f"{_PARSE_INSTRUCTIONS}\n\n{SCRIPT_MARKER}\n{script_text.strip()}\n"


def build_summary_prompt(script_text: str) -> str:
    return (
        "Summarize the script with a caption and a synopsis in JSON format "
        "such as the following example:\n"
        f"{encode_json(SUMMARY_EXAMPLE)}\n"
        f"{SCRIPT_MARKER}\n{script_text.strip()}\n"
    )


def build_regen_prompt(line_json: str, new_style: str, script_text: str) -> str:
    return (
        f"{line_json.rstrip()}\n\n"
        'Please update the fields "speech", "emotionAnalysis", and "shotAnalysis" '
        f"in the provided JSON to reflect the specified emotion, {new_style}, "
        "based on the context of the following script:\n\n"
        f"{script_text.strip()}\n"
    )
