"""Deterministic offline speech synthesis.

The duration model is exact in samples at 22050 Hz: every whitespace word
contributes a 0.40 s tone, every comma a 0.20 s pause, every sentence
ender (. ! ?) a 0.40 s pause, and an ellipsis "..." one ender pause plus
one comma pause.  The renderer and the duration model walk the same token
segments, so reported and rendered lengths can never drift.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .. import kernels
from ..errors import EmptySpeech
from .audio import SAMPLE_RATE, AudioClip

WORD_SAMPLES = 8820  # 0.40 s
COMMA_SAMPLES = 4410  # 0.20 s
ENDER_SAMPLES = 8820  # 0.40 s

AMPLITUDE = 0.89  # headroom: peak stays under -1 dBFS
ATTACK_SAMPLES = int(0.06 * SAMPLE_RATE)

_ENDERS = ".!?"


def _token_counts(token: str) -> tuple[int, int]:
    """(enders, commas) for one whitespace token; '...' is one ender + one comma."""
    n_ellipsis = token.count("...")
    rest = token.replace("...", "")
    enders = n_ellipsis + sum(1 for ch in rest if ch in _ENDERS)
    commas = n_ellipsis + rest.count(",")
    return enders, commas


def token_segments(speech_text: str) -> list[tuple[int, bool]]:
    """Flatten text into (length_samples, is_tone) segments, one pass per token."""
    segments: list[tuple[int, bool]] = []
    for token in speech_text.split():
        segments.append((WORD_SAMPLES, True))
        enders, commas = _token_counts(token)
        pause = enders * ENDER_SAMPLES + commas * COMMA_SAMPLES
        if pause:
            segments.append((pause, False))
    return segments


def duration_samples(speech_text: str) -> int:
    return sum(n for n, _ in token_segments(speech_text))


def voice_frequency(voice_id: str, style: str) -> float:
    """Stable per-(voice, style) tone frequency inside the voice's register."""
    if voice_id.startswith("stub-f"):
        lo, hi = 200.0, 300.0
    elif voice_id.startswith("stub-m"):
        lo, hi = 100.0, 180.0
    else:
        lo, hi = 120.0, 260.0
    digest = hashlib.sha256(f"{voice_id}|{style}".encode()).digest()
    u = int.from_bytes(digest[:8], "big") / 2**64
    return lo + u * (hi - lo)


def synthesize_offline(speech_text: str, voice_id: str, style: str) -> AudioClip:
    if not speech_text.strip():
        raise EmptySpeech("speech text is empty")
    segments = token_segments(speech_text)
    lengths = np.array([n for n, _ in segments], dtype=np.int64)
    f0 = voice_frequency(voice_id, style)
    freqs = np.array([f0 if tone else 0.0 for _, tone in segments], dtype=np.float64)
    wave = kernels.render_segments(lengths, freqs, SAMPLE_RATE, AMPLITUDE, ATTACK_SAMPLES)
    samples = np.clip(np.round(wave * 32767.0), -32768, 32767).astype(np.int16)
    return AudioClip(samples=samples, sample_rate=SAMPLE_RATE)
