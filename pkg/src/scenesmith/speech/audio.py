"""PCM audio container and RIFF WAV round-trip (16-bit mono)."""

from __future__ import annotations

import io
import wave
from dataclasses import dataclass
from pathlib import Path

import numpy as np

SAMPLE_RATE = 22050


@dataclass(frozen=True)
class AudioClip:
    samples: np.ndarray
    sample_rate: int = SAMPLE_RATE

    def __post_init__(self):
        if self.samples.dtype != np.int16:
            raise TypeError(f"samples must be int16, got {self.samples.dtype}")
        if self.samples.ndim != 1:
            raise ValueError("samples must be mono (1-d)")
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")

    @property
    def duration(self) -> float:
        return self.samples.shape[0] / self.sample_rate

    def __eq__(self, other):
        if not isinstance(other, AudioClip):
            return NotImplemented
        return self.sample_rate == other.sample_rate and np.array_equal(
            self.samples, other.samples
        )


def write_wav_bytes(clip: AudioClip) -> bytes:
    buf = io.BytesIO()
    with wave.open(buf, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(clip.sample_rate)
        w.writeframes(clip.samples.tobytes())
    return buf.getvalue()


def write_wav(clip: AudioClip, path: str | Path) -> None:
    Path(path).write_bytes(write_wav_bytes(clip))


def read_wav_bytes(data: bytes) -> AudioClip:
    try:
        with wave.open(io.BytesIO(data), "rb") as w:
            if w.getnchannels() != 1:
                raise ValueError(f"expected mono WAV, got {w.getnchannels()} channels")
            if w.getsampwidth() != 2:
                raise ValueError(f"expected 16-bit WAV, got {8 * w.getsampwidth()}-bit")
            raw = w.readframes(w.getnframes())
            rate = w.getframerate()
    except (wave.Error, EOFError) as e:
        raise ValueError(f"not a readable WAV stream: {e}") from None
    samples = np.frombuffer(raw, dtype="<i2").astype(np.int16)
    return AudioClip(samples=samples, sample_rate=rate)


def read_wav(path: str | Path) -> AudioClip:
    return read_wav_bytes(Path(path).read_bytes())
