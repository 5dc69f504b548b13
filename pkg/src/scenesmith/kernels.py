"""Hot numeric kernels, each with two interchangeable lanes.

Every kernel ships a numba-compiled loop implementation and a vectorized
numpy one.  The active lane is chosen by S2S_KERNELS (numba|numpy); when
numba is missing the numpy lane is used regardless.  Both lanes evaluate
the same closed-form expressions, so outputs agree to floating-point
noise (see the cross-lane tests), but golden values must never be frozen
against one lane's exact bits.

Only genuinely hot loops live here: tone-segment rendering (per-sample),
windowed RMS (per-sample), and whole-clip forward kinematics (frames x
joints).  Everything else in the package is ordinary numpy.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrapper(func):
            return func

        return wrapper


_forced_lane: str | None = None


def force_lane(name: str | None) -> None:
    """Override lane selection (tests and benchmarks). None restores env control."""
    global _forced_lane
    if name is not None and name not in ("numba", "numpy"):
        raise ValueError(f"unknown kernel lane {name!r}")
    _forced_lane = name


def active_lane() -> str:
    lane = _forced_lane or os.environ.get("S2S_KERNELS", "numba")
    if lane not in ("numba", "numpy"):
        raise ValueError(f"S2S_KERNELS must be numba or numpy, got {lane!r}")
    if lane == "numba" and not HAVE_NUMBA:
        return "numpy"
    return lane


# --- tone segment rendering ---------------------------------------------------
# A segment is (length_samples, frequency_hz); frequency 0 means silence.
# Tones get a raised-cosine attack/release of attack_n samples on each end.


@njit(cache=True)
def render_segments_numba(lengths, freqs, sr, amp, attack_n):
    total = 0
    for s in range(lengths.shape[0]):
        total += lengths[s]
    out = np.zeros(total, dtype=np.float64)
    off = 0
    for s in range(lengths.shape[0]):
        n = lengths[s]
        f = freqs[s]
        if f > 0.0:
            w = 2.0 * np.pi * f / sr
            for i in range(n):
                if i < attack_n:
                    up = 0.5 - 0.5 * np.cos(np.pi * i / attack_n)
                else:
                    up = 1.0
                if i >= n - attack_n:
                    down = 0.5 - 0.5 * np.cos(np.pi * (n - 1 - i) / attack_n)
                else:
                    down = 1.0
                out[off + i] = amp * up * down * np.sin(w * i)
        off += n
    return out


def render_segments_numpy(lengths, freqs, sr, amp, attack_n):
    out = np.zeros(int(lengths.sum()), dtype=np.float64)
    off = 0
    for n, f in zip(lengths, freqs):
        n = int(n)
        if f > 0.0:
            i = np.arange(n, dtype=np.float64)
            up = np.where(i < attack_n, 0.5 - 0.5 * np.cos(np.pi * i / attack_n), 1.0)
            down = np.where(
                i >= n - attack_n, 0.5 - 0.5 * np.cos(np.pi * (n - 1 - i) / attack_n), 1.0
            )
            out[off : off + n] = amp * up * down * np.sin(2.0 * np.pi * f / sr * i)
        off += n
    return out


def render_segments(lengths, freqs, sr: float, amp: float, attack_n: int) -> np.ndarray:
    """Render tone/silence segments to float64 samples in [-amp, amp]."""
    lengths = np.ascontiguousarray(lengths, dtype=np.int64)
    freqs = np.ascontiguousarray(freqs, dtype=np.float64)
    if lengths.shape != freqs.shape:
        raise ValueError("lengths and freqs must have equal shape")
    if attack_n < 1:
        raise ValueError("attack_n must be >= 1")
    if active_lane() == "numba":
        return render_segments_numba(lengths, freqs, float(sr), float(amp), int(attack_n))
    return render_segments_numpy(lengths, freqs, float(sr), float(amp), int(attack_n))


# --- windowed RMS -------------------------------------------------------------


@njit(cache=True)
def rms_envelope_numba(samples, win, hop):
    n_frames = (samples.shape[0] - win) // hop + 1
    out = np.empty(n_frames, dtype=np.float64)
    for k in range(n_frames):
        acc = 0.0
        start = k * hop
        for i in range(win):
            v = samples[start + i]
            acc += v * v
        out[k] = np.sqrt(acc / win)
    return out


def rms_envelope_numpy(samples, win, hop):
    windows = np.lib.stride_tricks.sliding_window_view(samples, win)[::hop]
    return np.sqrt(np.mean(windows * windows, axis=1))


def rms_envelope(samples, win: int, hop: int) -> np.ndarray:
    """Frame-wise RMS; frame k covers samples [k*hop, k*hop + win)."""
    samples = np.ascontiguousarray(samples, dtype=np.float64)
    if win <= 0 or hop <= 0:
        raise ValueError("win and hop must be positive")
    if samples.shape[0] < win:
        raise ValueError("signal shorter than one analysis window")
    if active_lane() == "numba":
        return rms_envelope_numba(samples, win, hop)
    return rms_envelope_numpy(samples, win, hop)


# --- forward kinematics -------------------------------------------------------
# Rotation channels are ZXY euler angles in degrees; the local matrix is
# R = Rz @ Rx @ Ry, expanded below so both lanes share one formula.


@njit(cache=True)
def fk_positions_numba(parents, offsets, rotations, root_pos):
    n_frames = rotations.shape[0]
    n_joints = rotations.shape[1]
    deg = np.pi / 180.0
    pos = np.empty((n_frames, n_joints, 3), dtype=np.float64)
    wrot = np.empty((n_frames, n_joints, 3, 3), dtype=np.float64)
    loc = np.empty((3, 3), dtype=np.float64)
    for fidx in range(n_frames):
        for j in range(n_joints):
            z = rotations[fidx, j, 0] * deg
            x = rotations[fidx, j, 1] * deg
            y = rotations[fidx, j, 2] * deg
            cz, sz = np.cos(z), np.sin(z)
            cx, sx = np.cos(x), np.sin(x)
            cy, sy = np.cos(y), np.sin(y)
            loc[0, 0] = cz * cy - sz * sx * sy
            loc[0, 1] = -sz * cx
            loc[0, 2] = cz * sy + sz * sx * cy
            loc[1, 0] = sz * cy + cz * sx * sy
            loc[1, 1] = cz * cx
            loc[1, 2] = sz * sy - cz * sx * cy
            loc[2, 0] = -cx * sy
            loc[2, 1] = sx
            loc[2, 2] = cx * cy
            p = parents[j]
            if p < 0:
                for r in range(3):
                    pos[fidx, j, r] = offsets[j, r] + root_pos[fidx, r]
                    for c in range(3):
                        wrot[fidx, j, r, c] = loc[r, c]
            else:
                for r in range(3):
                    acc = 0.0
                    for c in range(3):
                        acc += wrot[fidx, p, r, c] * offsets[j, c]
                    pos[fidx, j, r] = pos[fidx, p, r] + acc
                for r in range(3):
                    for c in range(3):
                        acc = 0.0
                        for k in range(3):
                            acc += wrot[fidx, p, r, k] * loc[k, c]
                        wrot[fidx, j, r, c] = acc
    return pos


def _euler_zxy_matrices(rotations_deg):
    """(frames, joints, 3) degrees -> (frames, joints, 3, 3) local matrices."""
    rad = np.deg2rad(rotations_deg)
    cz, sz = np.cos(rad[..., 0]), np.sin(rad[..., 0])
    cx, sx = np.cos(rad[..., 1]), np.sin(rad[..., 1])
    cy, sy = np.cos(rad[..., 2]), np.sin(rad[..., 2])
    m = np.empty(rad.shape[:-1] + (3, 3), dtype=np.float64)
    m[..., 0, 0] = cz * cy - sz * sx * sy
    m[..., 0, 1] = -sz * cx
    m[..., 0, 2] = cz * sy + sz * sx * cy
    m[..., 1, 0] = sz * cy + cz * sx * sy
    m[..., 1, 1] = cz * cx
    m[..., 1, 2] = sz * sy - cz * sx * cy
    m[..., 2, 0] = -cx * sy
    m[..., 2, 1] = sx
    m[..., 2, 2] = cx * cy
    return m


def fk_positions_numpy(parents, offsets, rotations, root_pos):
    n_frames, n_joints = rotations.shape[0], rotations.shape[1]
    local = _euler_zxy_matrices(rotations)
    pos = np.empty((n_frames, n_joints, 3), dtype=np.float64)
    wrot = np.empty((n_frames, n_joints, 3, 3), dtype=np.float64)
    for j in range(n_joints):
        p = parents[j]
        if p < 0:
            pos[:, j] = offsets[j] + root_pos
            wrot[:, j] = local[:, j]
        else:
            pos[:, j] = pos[:, p] + np.einsum("fij,j->fi", wrot[:, p], offsets[j])
            wrot[:, j] = np.einsum("fij,fjk->fik", wrot[:, p], local[:, j])
    return pos


def fk_positions(parents, offsets, rotations, root_pos) -> np.ndarray:
    """World joint positions for a whole clip.

    parents: (joints,) parent indices, -1 for the root, topologically sorted.
    offsets: (joints, 3) rest offsets from parent.
    rotations: (frames, joints, 3) ZXY euler degrees in channel order.
    root_pos: (frames, 3) root translation channels.
    """
    parents = np.ascontiguousarray(parents, dtype=np.int64)
    offsets = np.ascontiguousarray(offsets, dtype=np.float64)
    rotations = np.ascontiguousarray(rotations, dtype=np.float64)
    root_pos = np.ascontiguousarray(root_pos, dtype=np.float64)
    n_joints = parents.shape[0]
    if parents[0] != -1 or np.any(parents[1:] >= np.arange(1, n_joints)):
        raise ValueError("parents must be topologically sorted with root first")
    if offsets.shape != (n_joints, 3):
        raise ValueError("offsets shape mismatch")
    if rotations.ndim != 3 or rotations.shape[1:] != (n_joints, 3):
        raise ValueError("rotations shape mismatch")
    if root_pos.shape != (rotations.shape[0], 3):
        raise ValueError("root_pos shape mismatch")
    if active_lane() == "numba":
        return fk_positions_numba(parents, offsets, rotations, root_pos)
    return fk_positions_numpy(parents, offsets, rotations, root_pos)
