"""Motion clip container: a skeleton plus per-frame channel values."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .skeleton import Skeleton


@dataclass
class MotionClip:
    """rotations[f, j] holds joint j's three rotation values in ITS declared
    channel order (degrees); root_positions[f] is the root translation in
    canonical X, Y, Z order regardless of declared position channel order.
    """

    skeleton: Skeleton
    rotations: np.ndarray
    root_positions: np.ndarray
    frame_time: float

    def __post_init__(self):
        self.rotations = np.asarray(self.rotations, dtype=np.float64)
        self.root_positions = np.asarray(self.root_positions, dtype=np.float64)
        n_joints = len(self.skeleton)
        if self.rotations.ndim != 3 or self.rotations.shape[1:] != (n_joints, 3):
            raise ValueError("rotations must have shape (frames, joints, 3)")
        if self.rotations.shape[0] < 1:
            raise ValueError("a clip needs at least one frame")
        if self.root_positions.shape != (self.rotations.shape[0], 3):
            raise ValueError("root_positions must have shape (frames, 3)")
        if self.frame_time <= 0:
            raise ValueError("frame_time must be positive")

    @property
    def n_frames(self) -> int:
        return self.rotations.shape[0]

    @property
    def duration(self) -> float:
        # duration spans frame 0 to the last frame, not one frame past it
        return (self.n_frames - 1) * self.frame_time
