"""Skeleton tree model and the canonical 17-joint gesture skeleton."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

ROOT_CHANNELS = ("Xposition", "Yposition", "Zposition", "Zrotation", "Xrotation", "Yrotation")
ZXY = ("Zrotation", "Xrotation", "Yrotation")

_POSITION_CHANNELS = frozenset(("Xposition", "Yposition", "Zposition"))
_ROTATION_CHANNELS = frozenset(("Zrotation", "Xrotation", "Yrotation"))


@dataclass
class Joint:
    name: str
    offset: np.ndarray
    channels: tuple[str, ...] = ZXY
    children: list["Joint"] = field(default_factory=list)
    end_site: np.ndarray | None = None

    def __post_init__(self):
        self.offset = np.asarray(self.offset, dtype=np.float64)
        if self.offset.shape != (3,):
            raise ValueError(f"joint {self.name!r}: offset must be a 3-vector")
        if self.end_site is not None:
            self.end_site = np.asarray(self.end_site, dtype=np.float64)

    @property
    def rotation_order(self) -> tuple[str, ...]:
        return tuple(c for c in self.channels if c in _ROTATION_CHANNELS)


class Skeleton:
    """Joint tree flattened depth-first (declaration order), root at index 0."""

    def __init__(self, root: Joint):
        self.root = root
        self.joints: list[Joint] = []
        self.parents_list: list[int] = []
        self._walk(root, -1)
        names = [j.name for j in self.joints]
        if len(set(names)) != len(names):
            raise ValueError("joint names must be unique")
        self._index = {name: i for i, name in enumerate(names)}
        for j in self.joints:
            if not np.all(np.isfinite(j.offset)):
                raise ValueError(f"joint {j.name!r}: offset must be finite")
        self._validate_channels()

    def _walk(self, joint: Joint, parent: int):
        idx = len(self.joints)
        self.joints.append(joint)
        self.parents_list.append(parent)
        for child in joint.children:
            self._walk(child, idx)

    def _validate_channels(self):
        root = self.joints[0]
        pos = [c for c in root.channels if c in _POSITION_CHANNELS]
        rot = [c for c in root.channels if c in _ROTATION_CHANNELS]
        if len(root.channels) != 6 or sorted(pos) != sorted(_POSITION_CHANNELS) or len(rot) != 3:
            raise ValueError("root must carry 3 position + 3 rotation channels")
        if len(set(rot)) != 3:
            raise ValueError("root rotation channels must be distinct")
        for j in self.joints[1:]:
            rot = [c for c in j.channels if c in _ROTATION_CHANNELS]
            if len(j.channels) != 3 or len(set(rot)) != 3:
                raise ValueError(f"joint {j.name!r} must carry exactly 3 rotation channels")

    def __len__(self):
        return len(self.joints)

    @property
    def names(self) -> list[str]:
        return [j.name for j in self.joints]

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    @property
    def parents(self) -> np.ndarray:
        return np.array(self.parents_list, dtype=np.int64)

    @property
    def offsets(self) -> np.ndarray:
        return np.stack([j.offset for j in self.joints])

    def rest_positions(self, include_end_sites: bool = False) -> np.ndarray:
        """World joint positions with all rotations zero and no root translation."""
        pos = np.zeros((len(self.joints), 3))
        for i, j in enumerate(self.joints):
            p = self.parents_list[i]
            pos[i] = j.offset if p < 0 else pos[p] + j.offset
        if not include_end_sites:
            return pos
        ends = [pos[i] + j.end_site for i, j in enumerate(self.joints) if j.end_site is not None]
        return np.vstack([pos] + [np.array(ends)]) if ends else pos

    def height(self) -> float:
        """Rest vertical extent (head top to floor), end sites included."""
        pos = self.rest_positions(include_end_sites=True)
        return float(pos[:, 1].max() - pos[:, 1].min())

    def bone_direction(self, name: str) -> np.ndarray:
        """Rest-pose direction of the bone leaving this joint (unnormalized).

        Convention: toward the first declared child, or the end site for
        leaf joints.  Zero when the joint has neither.
        """
        j = self.joints[self.index(name)]
        if j.children:
            return j.children[0].offset.copy()
        if j.end_site is not None:
            return j.end_site.copy()
        return np.zeros(3)

    def channel_layout(self) -> list[tuple[int, str]]:
        """Flat (joint_index, channel_name) pairs in BVH column order."""
        cols = []
        for i, j in enumerate(self.joints):
            cols.extend((i, c) for c in j.channels)
        return cols

    @property
    def n_channels(self) -> int:
        return sum(len(j.channels) for j in self.joints)


# Canonical gesture skeleton: 17 joints, centimeters, Y-up right-handed,
# T-pose with arms along +/-X, toes touching the floor, head top at 170.
def canonical_skeleton() -> Skeleton:
    def j(name, offset, children=(), end=None):
        return Joint(name, np.array(offset, float), ZXY, list(children), end)

    left_hand = j("LeftHand", (26, 0, 0), end=(14, 0, 0))
    left_fore = j("LeftForeArm", (28, 0, 0), [left_hand])
    left_arm = j("LeftArm", (12, 13, 0), [left_fore])
    right_hand = j("RightHand", (-26, 0, 0), end=(-14, 0, 0))
    right_fore = j("RightForeArm", (-28, 0, 0), [right_hand])
    right_arm = j("RightArm", (-12, 13, 0), [right_fore])
    head = j("Head", (0, 11, 0), end=(0, 18, 0))
    neck = j("Neck", (0, 15, 0), [head])
    spine1 = j("Spine1", (0, 15, 0), [neck, left_arm, right_arm])
    spine = j("Spine", (0, 13, 0), [spine1])
    left_foot = j("LeftFoot", (0, -45, 0), end=(0, -4, 14))
    left_leg = j("LeftLeg", (0, -45, 0), [left_foot])
    left_upleg = j("LeftUpLeg", (9, -4, 0), [left_leg])
    right_foot = j("RightFoot", (0, -45, 0), end=(0, -4, 14))
    right_leg = j("RightLeg", (0, -45, 0), [right_foot])
    right_upleg = j("RightUpLeg", (-9, -4, 0), [right_leg])
    hips = Joint(
        "Hips",
        np.array((0, 98, 0), float),
        ROOT_CHANNELS,
        [spine, left_upleg, right_upleg],
    )
    return Skeleton(hips)


CANONICAL_JOINT_COUNT = 17
