"""Audio features driving gesture rhythm: RMS envelope and onset times."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import kernels
from ..errors import ClipTooShort
from ..speech.audio import AudioClip

DEFAULT_WINDOW = 0.050
DEFAULT_HOP = 0.020

ONSET_RISE = 0.08
ONSET_FLOOR = 0.02
ONSET_REFRACTORY = 0.200


@dataclass(frozen=True)
class Envelope:
    values: np.ndarray
    frame_hop: float = DEFAULT_HOP
    window: float = DEFAULT_WINDOW
    sample_rate: int = 22050

    @property
    def hop_samples(self) -> int:
        return int(self.frame_hop * self.sample_rate)

    @property
    def window_samples(self) -> int:
        return int(self.window * self.sample_rate)

    def frame_time(self, k: int) -> float:
        """Center time of analysis frame k, in seconds."""
        return (k * self.hop_samples + self.window_samples / 2) / self.sample_rate

    @property
    def times(self) -> np.ndarray:
        k = np.arange(len(self.values))
        return (k * self.hop_samples + self.window_samples / 2) / self.sample_rate


@dataclass(frozen=True)
class OnsetList:
    times: tuple[float, ...]
    threshold: float = ONSET_RISE
    refractory: float = ONSET_REFRACTORY

    def __post_init__(self):
        for a, b in zip(self.times, self.times[1:]):
            if b <= a:
                raise ValueError("onset times must be strictly ascending")


def compute_envelope(
    clip: AudioClip, window: float = DEFAULT_WINDOW, hop: float = DEFAULT_HOP
) -> Envelope:
    """Frame-wise RMS of the clip, normalized so full scale is 1.0."""
    win = int(window * clip.sample_rate)
    hop_n = int(hop * clip.sample_rate)
    if clip.samples.shape[0] < win:
        raise ClipTooShort(
            f"clip has {clip.samples.shape[0]} samples, analysis window needs {win}"
        )
    normalized = clip.samples.astype(np.float64) / 32767.0
    values = kernels.rms_envelope(normalized, win, hop_n)
    return Envelope(values=values, frame_hop=hop, window=window, sample_rate=clip.sample_rate)


def detect_onsets(
    env: Envelope,
    threshold: float = ONSET_RISE,
    floor: float = ONSET_FLOOR,
    refractory: float = ONSET_REFRACTORY,
) -> OnsetList:
    """Rising-edge onsets: jump over `threshold` landing above `floor`,
    suppressed within `refractory` seconds of the previous onset.
    """
    times: list[float] = []
    values = env.values
    last = -np.inf
    for k in range(1, len(values)):
        if values[k] - values[k - 1] > threshold and values[k] > floor:
            t = env.frame_time(k)
            if t - last >= refractory:
                times.append(t)
                last = t
    return OnsetList(times=tuple(times), threshold=threshold, refractory=refractory)
