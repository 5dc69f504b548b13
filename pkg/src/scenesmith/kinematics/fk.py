"""Forward kinematics over motion clips.

Clips whose joints all declare ZXY rotation order (everything this package
generates) run through the batched kernel; anything parsed from elsewhere
falls back to a generic per-channel-order composition.
"""

from __future__ import annotations

import numpy as np

from .. import kernels
from ..errors import IndexOutOfRange
from .clip import MotionClip
from .skeleton import ZXY

_AXIS_OF = {"Xrotation": 0, "Yrotation": 1, "Zrotation": 2}


def _axis_matrices(axis: int, rad: np.ndarray) -> np.ndarray:
    c, s = np.cos(rad), np.sin(rad)
    m = np.zeros(rad.shape + (3, 3), dtype=np.float64)
    if axis == 0:
        m[..., 0, 0] = 1
        m[..., 1, 1], m[..., 1, 2] = c, -s
        m[..., 2, 1], m[..., 2, 2] = s, c
    elif axis == 1:
        m[..., 1, 1] = 1
        m[..., 0, 0], m[..., 0, 2] = c, s
        m[..., 2, 0], m[..., 2, 2] = -s, c
    else:
        m[..., 2, 2] = 1
        m[..., 0, 0], m[..., 0, 1] = c, -s
        m[..., 1, 0], m[..., 1, 1] = s, c
    return m


def local_rotation_matrices(clip: MotionClip) -> np.ndarray:
    """(frames, joints, 3, 3) local matrices honoring declared channel order."""
    n_frames, n_joints = clip.rotations.shape[:2]
    out = np.empty((n_frames, n_joints, 3, 3), dtype=np.float64)
    rad = np.deg2rad(clip.rotations)
    for j, joint in enumerate(clip.skeleton.joints):
        order = joint.rotation_order
        m = _axis_matrices(_AXIS_OF[order[0]], rad[:, j, 0])
        for r in (1, 2):
            m = m @ _axis_matrices(_AXIS_OF[order[r]], rad[:, j, r])
        out[:, j] = m
    return out


def _fk_generic(clip: MotionClip) -> np.ndarray:
    local = local_rotation_matrices(clip)
    skel = clip.skeleton
    parents = skel.parents
    offsets = skel.offsets
    n_frames, n_joints = clip.rotations.shape[:2]
    pos = np.empty((n_frames, n_joints, 3), dtype=np.float64)
    wrot = np.empty((n_frames, n_joints, 3, 3), dtype=np.float64)
    for j in range(n_joints):
        p = parents[j]
        if p < 0:
            pos[:, j] = offsets[j] + clip.root_positions
            wrot[:, j] = local[:, j]
        else:
            pos[:, j] = pos[:, p] + np.einsum("fij,j->fi", wrot[:, p], offsets[j])
            wrot[:, j] = np.einsum("fij,fjk->fik", wrot[:, p], local[:, j])
    return pos


def fk_all_frames(clip: MotionClip) -> np.ndarray:
    """World joint positions for every frame, shape (frames, joints, 3)."""
    if all(j.rotation_order == ZXY for j in clip.skeleton.joints):
        return kernels.fk_positions(
            clip.skeleton.parents, clip.skeleton.offsets, clip.rotations, clip.root_positions
        )
    return _fk_generic(clip)


def forward_kinematics(clip: MotionClip, frame_index: int) -> np.ndarray:
    """World joint positions for one frame, shape (joints, 3)."""
    if not 0 <= frame_index < clip.n_frames:
        raise IndexOutOfRange(f"frame {frame_index} outside 0..{clip.n_frames - 1}")
    one = MotionClip(
        clip.skeleton,
        clip.rotations[frame_index : frame_index + 1],
        clip.root_positions[frame_index : frame_index + 1],
        clip.frame_time,
    )
    return fk_all_frames(one)[0]
