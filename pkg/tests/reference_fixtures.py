"""Frozen reference payloads used as replay-provider fixtures.

The two-line Tom/Bob annotation and the matching summary are external
reference values; tests treat them as ground truth and never derive them
from package code.  The home-renovation scenario keeps Alice's two
recorded annotations (the "Threatening" first pass and the "Neutral"
pass after extra context was added); Bob's records and all shot fields
in that scenario are composed here to complete the replay payloads, and
are marked as such.
"""

TOM_BOB_SCRIPT = (
    "Tom: Hello, how are you feeling after your all-nighter?\n"
    "Bob: I'm doing well, thank you.\n"
)

TOM_BOB_RECORDS = [
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

TOM_BOB_SUMMARY = {
    "title": "Greeting After an All-Nighter",
    "synopsis": "Two friends greet each other after an all-nighter.",
}


# --- home-renovation context-sensitivity scenario ---------------------------

_ALICE_LINE = (
    "Hey Bob you remember we're doing the stairs this weekend right? "
    "You better not have made any plans with friends."
)
_BOB_LINE = (
    "Oh crap. How can I get out of this. "
    "I already told Suzie I'm spending the weekend with her."
)

RENO_SCRIPT_NO_CONTEXT = (
    "Weekend plans - planning on doing some home renos, gonna reface the stairs. "
    "Alice is Bob's mom\n"
    "\n"
    f"Alice: {_ALICE_LINE}\n"
    "\n"
    f"Bob (to himself): {_BOB_LINE}\n"
)

RENO_SCRIPT_WITH_CONTEXT = (
    "Weekend plans - planning on doing some home renos, gonna reface the stairs. "
    "Alice is Bob's mom. Alice is NOT a valley girl. "
    "Alice is an average 50 year old lady.\n"
    "\n"
    f"Alice: {_ALICE_LINE}\n"
    "\n"
    f"Bob (to himself): {_BOB_LINE}\n"
)

# the aside is folded into the line text by the parser
_BOB_TEXT = f"{_BOB_LINE} (to himself)"

# composed: shared shot fields for the scenario (the reference shows none)
_SHOT = {
    "shotType": "Medium shot",
    "shotAngle": "Eye level",
    "shotAnalysis": "A medium shot at eye level suits a kitchen-table exchange.",
}

# composed: Bob's full records (the reference shows only Alice's excerpt)
_BOB_RECORD = {
    "id": "Bob",
    "text": _BOB_TEXT,
    "speech": "Oh, crap... how can I get out of this? I already told Suzie I'm, um, spending the weekend with her.",
    "style": "Scared",
    "emotionAnalysis": "Bob is panicking about the conflicting promise, so a scared style fits.",
    **_SHOT,
}

RENO_RECORDS_NO_CONTEXT = [
    {
        "id": "Alice",
        "text": _ALICE_LINE,
        "speech": (
            "Hey Bob! So, um, you remember we're doing the stairs this weekend, right? "
            "You really better not have, like, made any plans with friends."
        ),
        "style": "Threatening",
        "emotionAnalysis": (
            "Alice is asserting her authority about the plans and warning Bob not to "
            "flake on her. The threatening style conveys firmness."
        ),
        **_SHOT,
    },
    dict(_BOB_RECORD),
]

RENO_RECORDS_WITH_CONTEXT = [
    {
        "id": "Alice",
        "text": _ALICE_LINE,
        "speech": (
            "Hey, Bob! So, you remember we're tackling the stairs this weekend, right? "
            "You haven't gone and made any plans with your friends, have you?"
        ),
        "style": "Neutral",
        "emotionAnalysis": (
            "Alice is making a comment about the weekend plans but also conveying a hint "
            "of concern that Bob might not be prioritizing the family task."
        ),
        **_SHOT,
    },
    dict(_BOB_RECORD),
]

# composed summaries so the replay provider can answer both prompts
RENO_SUMMARY = {
    "title": "Stairs This Weekend",
    "synopsis": "A mother reminds her son about weekend renovation plans he hoped to dodge.",
}
