"""Style-conditioned procedural gesture synthesis on the canonical skeleton.

Each detected onset fires one stroke: a raised-cosine rotation pulse on the
shoulder/elbow/wrist chain, arms alternating (left first).  The pulse rises
over stroke_duration centered so peak angular speed lands exactly on the
onset, then decays three times slower, giving a single speed peak per
stroke.  Sway is a low-frequency lean on the spine chain; posture offsets
hold for the whole clip.  Everything is closed-form in numpy, so identical
inputs give bit-identical output.
"""

from __future__ import annotations

import numpy as np

from ..kinematics.clip import MotionClip
from ..kinematics.skeleton import canonical_skeleton
from ..speech.audio import AudioClip
from .features import Envelope, OnsetList, compute_envelope, detect_onsets
from .styles import StyleParams, style_params

FPS = 60
STROKE_CHAINS = (
    ("LeftArm", "LeftForeArm", "LeftHand"),
    ("RightArm", "RightForeArm", "RightHand"),
)
STROKE_WEIGHTS = (1.0, 0.8, 0.6)
SWAY_JOINTS = ("Spine", "Spine1", "Neck")
ENERGY_WINDOW = 0.200  # seconds after the onset searched for the envelope peak

_SKELETON = canonical_skeleton()


def frame_count(n_samples: int, sample_rate: int) -> int:
    # integer arithmetic: the last frame never lands past the audio end
    return n_samples * FPS // sample_rate + 1


def _stroke_profile(t: np.ndarray, onset: float, d_up: float) -> np.ndarray:
    t0 = onset - d_up / 2.0
    rise_end = t0 + d_up
    decay_end = rise_end + 3.0 * d_up
    out = np.zeros_like(t)
    rise = (t >= t0) & (t < rise_end)
    out[rise] = 0.5 * (1.0 - np.cos(np.pi * (t[rise] - t0) / d_up))
    decay = (t >= rise_end) & (t <= decay_end)
    out[decay] = 0.5 * (1.0 + np.cos(np.pi * (t[decay] - rise_end) / (3.0 * d_up)))
    return out


def _local_peak(env: Envelope, onset: float) -> float:
    times = env.times
    mask = (times >= onset - 1e-9) & (times <= onset + ENERGY_WINDOW)
    if not mask.any():
        return float(env.values[np.argmin(np.abs(times - onset))])
    return float(env.values[mask].max())


def plan_strokes(
    onsets: OnsetList, env: Envelope, params: StyleParams
) -> list[tuple[float, int, float]]:
    """(onset_time, side, peak_radians) per stroke; side 0 = left arm."""
    strokes = []
    for i, t_on in enumerate(onsets.times):
        peak = params.stroke_amplitude * params.energy_gain * _local_peak(env, t_on)
        strokes.append((t_on, i % 2, peak))
    return strokes


def synthesize_gestures(audio: AudioClip, style: str) -> MotionClip:
    params = style_params(style)
    env = compute_envelope(audio)
    onsets = detect_onsets(env)

    skeleton = _SKELETON
    n_frames = frame_count(audio.samples.shape[0], audio.sample_rate)
    t = np.arange(n_frames, dtype=np.float64) / FPS
    rot = np.zeros((n_frames, len(skeleton), 3), dtype=np.float64)

    for name, zxy in params.base_posture.items():
        rot[:, skeleton.index(name), :] += np.asarray(zxy, dtype=np.float64)

    if params.sway_amplitude > 0 and params.sway_frequency > 0:
        for i, name in enumerate(SWAY_JOINTS):
            phase = 0.7 * i
            sway = np.degrees(params.sway_amplitude) * np.sin(
                2.0 * np.pi * params.sway_frequency * t + phase
            )
            rot[:, skeleton.index(name), 0] += sway

    if params.stroke_amplitude > 0:
        for t_on, side, peak in plan_strokes(onsets, env, params):
            profile = _stroke_profile(t, t_on, params.stroke_duration)
            lift_sign = 1.0 if side == 0 else -1.0
            for name, w in zip(STROKE_CHAINS[side], STROKE_WEIGHTS):
                j = skeleton.index(name)
                theta = np.degrees(peak * w) * profile
                rot[:, j, 0] += lift_sign * theta
                rot[:, j, 2] += 0.5 * theta

    root_pos = np.zeros((n_frames, 3), dtype=np.float64)
    return MotionClip(skeleton, rot, root_pos, 1.0 / FPS)
