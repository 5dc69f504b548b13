"""Camera pose realization for per-line shot plans.

Conventions: meters, Y-up right-handed; a lone subject faces +Z and the
camera sits in front along +Z looking back.  Eye-level shots aim at the
subject's eye point, which is what makes their pitch exactly zero; high
and low angles aim at the framed band's center with fixed pitches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SubjectsCoincident
from .vocab import check_angle, check_shot

FOV_VERTICAL = 40.0
EYE_HEIGHT_FRACTION = 0.93
FRAME_FRACTION = {"Close-up": 0.35, "Medium shot": 0.70, "Long shot": 1.30}
PITCH_DEGREES = {"Eye level": 0.0, "High angle": -25.0, "Low angle": 15.0}
PAIR_SEPARATION = 1.2
OTS_AZIMUTH = 30.0  # over-the-shoulder offset off the speaker-listener axis

_UP = np.array([0.0, 1.0, 0.0])


@dataclass(frozen=True)
class SubjectBounds:
    floor_center: np.ndarray
    height: float
    eye_height: float | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "floor_center", np.asarray(self.floor_center, dtype=np.float64)
        )
        if self.floor_center.shape != (3,):
            raise ValueError("floor_center must be a 3-vector")
        if self.height <= 0:
            raise ValueError("height must be positive")
        eye = self.eye_height if self.eye_height is not None else EYE_HEIGHT_FRACTION * self.height
        if not 0 < eye <= self.height:
            raise ValueError("eye_height must lie in (0, height]")
        object.__setattr__(self, "eye_height", eye)


@dataclass(frozen=True)
class CameraPose:
    position: np.ndarray
    look_at: np.ndarray
    fov_vertical: float = FOV_VERTICAL
    roll: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=np.float64))
        object.__setattr__(self, "look_at", np.asarray(self.look_at, dtype=np.float64))
        if self.roll != 0.0:
            raise ValueError("roll is pinned to 0 (canted shots are not in the vocabulary)")
        if np.allclose(self.position, self.look_at):
            raise ValueError("camera position must differ from look_at")

    def to_record(self) -> dict:
        return {
            "position": [float(v) for v in self.position],
            "lookAt": [float(v) for v in self.look_at],
            "fovVertical": self.fov_vertical,
            "roll": self.roll,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "CameraPose":
        return cls(
            np.array(rec["position"], dtype=np.float64),
            np.array(rec["lookAt"], dtype=np.float64),
            float(rec["fovVertical"]),
            float(rec["roll"]),
        )


def shot_distance(height: float, shot: str, fov_vertical: float = FOV_VERTICAL) -> float:
    """Axis distance at which the shot's framed extent fills the vertical fov."""
    h = FRAME_FRACTION[shot] * height
    return (h / 2.0) / math.tan(math.radians(fov_vertical / 2.0))


def _aim_point(bounds: SubjectBounds, shot: str, angle: str) -> np.ndarray:
    base = bounds.floor_center.copy()
    if angle == "Eye level":
        base[1] += bounds.eye_height
        return base
    h = FRAME_FRACTION[shot] * bounds.height
    if shot == "Long shot":
        base[1] += bounds.height / 2.0
    else:
        # waist-up and head framings hang from the head top
        base[1] += bounds.height - h / 2.0
    return base


def _pose_along(view_dir_h: np.ndarray, bounds: SubjectBounds, shot: str, angle: str,
                fov_vertical: float) -> CameraPose:
    """Build the pose given the horizontal unit direction the camera looks along."""
    check_shot(shot)
    check_angle(angle)
    pitch = math.radians(PITCH_DEGREES[angle])
    view = np.array(
        [
            view_dir_h[0] * math.cos(pitch),
            math.sin(pitch),
            view_dir_h[2] * math.cos(pitch),
        ]
    )
    d = shot_distance(bounds.height, shot, fov_vertical)
    look_at = _aim_point(bounds, shot, angle)
    position = look_at - d * view
    return CameraPose(position=position, look_at=look_at, fov_vertical=fov_vertical)


def frame_subject(
    bounds: SubjectBounds, shot: str, angle: str, fov_vertical: float = FOV_VERTICAL
) -> CameraPose:
    """Camera pose framing one subject from the front."""
    return _pose_along(np.array([0.0, 0.0, -1.0]), bounds, shot, angle, fov_vertical)


def place_pair(
    speaker: SubjectBounds, listener: SubjectBounds
) -> tuple[SubjectBounds, SubjectBounds]:
    """Re-seat two subjects PAIR_SEPARATION apart on their axis, facing each other."""
    axis = listener.floor_center - speaker.floor_center
    axis[1] = 0.0
    norm = float(np.linalg.norm(axis))
    if norm < 1e-9:
        raise SubjectsCoincident("speaker and listener occupy the same spot")
    a = axis / norm
    mid = (speaker.floor_center + listener.floor_center) / 2.0
    mid[1] = 0.0
    half = (PAIR_SEPARATION / 2.0) * a
    return (
        SubjectBounds(mid - half, speaker.height, speaker.eye_height),
        SubjectBounds(mid + half, listener.height, listener.eye_height),
    )


def two_shot_layout(
    speaker: SubjectBounds,
    listener: SubjectBounds,
    shot: str,
    angle: str,
    fov_vertical: float = FOV_VERTICAL,
    fit_both: bool = True,
) -> CameraPose:
    """Over-the-shoulder framing of the current speaker.

    The camera looks at the speaker along a direction OTS_AZIMUTH degrees
    off the speaker-listener axis.  The lateral side is canonical for the
    pair (not for who is speaking), so swapping roles mirrors the pose
    across the midline and the eyeline never jumps the axis.  With
    fit_both the distance starts at the speaker's frame_subject distance
    and backs off just far enough that both subjects' heads and feet clear
    the vertical fov, so nobody is cropped; without it the pose frames the
    speaker alone (close coverage is allowed to crop the listener).
    """
    seated_speaker, seated_listener = place_pair(speaker, listener)
    a = seated_listener.floor_center - seated_speaker.floor_center
    a /= np.linalg.norm(a)

    canon = a if (a[0], a[2]) > (0.0, 0.0) else -a
    side = np.cross(_UP, canon)
    az = math.radians(OTS_AZIMUTH)
    view_dir_h = math.cos(az) * (-a) + math.sin(az) * side
    pose = _pose_along(view_dir_h, seated_speaker, shot, angle, fov_vertical)
    if not fit_both:
        return pose

    view = pose.look_at - pose.position
    d0 = float(np.linalg.norm(view))
    f = view / d0
    r = np.cross(f, _UP)
    r /= np.linalg.norm(r)
    u = np.cross(r, f)
    ty = math.tan(math.radians(fov_vertical / 2.0))
    d = d0
    for subj in (seated_speaker, seated_listener):
        for y_off in (0.0, subj.height):
            p = subj.floor_center + np.array([0.0, y_off, 0.0])
            rel = p - pose.look_at
            # moving the camera back along f leaves these two fixed
            y, z = float(rel @ u), float(rel @ f)
            d = max(d, abs(y) / ty - z, 0.3 - z)
    return CameraPose(pose.look_at - d * f, pose.look_at, fov_vertical)
