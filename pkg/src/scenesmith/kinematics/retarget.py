"""Rest-pose-correction retargeting onto differently proportioned skeletons."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateBone, MapInvalid
from .clip import MotionClip
from .fk import local_rotation_matrices
from .skeleton import Skeleton, ZXY

_AXIS_INDEX = {"Xrotation": 0, "Yrotation": 1, "Zrotation": 2}
_EVEN = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


@dataclass(frozen=True)
class JointMap:
    """source joint name -> target joint name; must be injective."""

    pairs: dict[str, str]

    def validate(self, source: Skeleton, target: Skeleton) -> None:
        if not self.pairs:
            raise MapInvalid("joint map is empty")
        targets = list(self.pairs.values())
        if len(set(targets)) != len(targets):
            raise MapInvalid("joint map is not injective on target names")
        for s, t in self.pairs.items():
            if s not in source:
                raise MapInvalid(f"source joint {s!r} not in source skeleton")
            if t not in target:
                raise MapInvalid(f"target joint {t!r} not in target skeleton")


def parse_jointmap(text: str) -> JointMap:
    """Two whitespace-separated columns per line; # starts a comment."""
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MapInvalid(f"line {lineno}: expected 'source target', got {raw!r}")
        if tokens[0] in pairs:
            raise MapInvalid(f"line {lineno}: duplicate source joint {tokens[0]!r}")
        pairs[tokens[0]] = tokens[1]
    return JointMap(pairs)


def write_jointmap(jm: JointMap) -> str:
    return "".join(f"{s} {t}\n" for s, t in jm.pairs.items())


def _align_rotation(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minimal rotation taking unit vector a onto unit vector b (Rodrigues)."""
    axis = np.cross(a, b)
    s2 = float(axis @ axis)
    c = float(a @ b)
    if s2 < 1e-18:
        if c > 0:
            return np.eye(3)
        # opposite vectors: rotate 180 degrees about any axis orthogonal to a
        helper = np.array([1.0, 0.0, 0.0]) if abs(a[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        axis = np.cross(a, helper)
        axis /= np.linalg.norm(axis)
        return 2.0 * np.outer(axis, axis) - np.eye(3)
    k = np.array(
        [
            [0.0, -axis[2], axis[1]],
            [axis[2], 0.0, -axis[0]],
            [-axis[1], axis[0], 0.0],
        ]
    )
    return np.eye(3) + k + k @ k * ((1.0 - c) / s2)


def matrices_to_euler(m: np.ndarray, order: tuple[str, str, str] = ZXY) -> np.ndarray:
    """Batch rotation matrices -> intrinsic euler angles (degrees) for any
    Tait-Bryan channel order; angles come back in the declared order.
    """
    i, j, k = (_AXIS_INDEX[ch] for ch in order)
    eps = 1.0 if (i, j, k) in _EVEN else -1.0
    sb = np.clip(eps * m[..., i, k], -1.0, 1.0)
    b = np.arcsin(sb)
    a = np.arctan2(-eps * m[..., j, k], m[..., k, k])
    c = np.arctan2(-eps * m[..., i, j], m[..., i, i])
    locked = np.abs(sb) > 1.0 - 1e-10
    if np.any(locked):
        a_lock = np.arctan2(eps * m[..., k, j], m[..., j, j])
        a = np.where(locked, a_lock, a)
        c = np.where(locked, 0.0, c)
    return np.degrees(np.stack([a, b, c], axis=-1))


def retarget(clip: MotionClip, target: Skeleton, jm: JointMap) -> MotionClip:
    """Transfer a clip onto `target`.

    Each mapped joint gets R_target = C R_source C^T, where C aligns the
    source rest bone direction with the target one; root translation is
    scaled by the height ratio; unmapped target joints stay at rest.
    """
    source = clip.skeleton
    jm.validate(source, target)

    corrections: dict[int, tuple[int, np.ndarray]] = {}
    for s_name, t_name in jm.pairs.items():
        a = source.bone_direction(s_name)
        b = target.bone_direction(t_name)
        na, nb = np.linalg.norm(a), np.linalg.norm(b)
        if na < 1e-9:
            raise DegenerateBone(f"source joint {s_name!r} has a zero-length bone")
        if nb < 1e-9:
            raise DegenerateBone(f"target joint {t_name!r} has a zero-length bone")
        corrections[source.index(s_name)] = (target.index(t_name), _align_rotation(a / na, b / nb))

    src_local = local_rotation_matrices(clip)
    n_frames = clip.n_frames
    out_rot = np.zeros((n_frames, len(target), 3), dtype=np.float64)
    for s_idx, (t_idx, corr) in corrections.items():
        transferred = np.einsum("ij,fjk,lk->fil", corr, src_local[:, s_idx], corr)
        order = target.joints[t_idx].rotation_order
        out_rot[:, t_idx] = matrices_to_euler(transferred, order)

    src_h = source.height()
    if src_h < 1e-9:
        raise DegenerateBone("source skeleton has zero height")
    scale = target.height() / src_h
    return MotionClip(target, out_rot, clip.root_positions * scale, clip.frame_time)
