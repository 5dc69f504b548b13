"""Bundled retarget targets: capsule-adult and capsule-kid.

Each character ships as `characters/<id>/{skeleton.bvh, jointmap.txt,
meta.json}`.  The files are the runtime source of truth; the builders
here regenerate them (rebuild_character_data) and let tests guard
against drift between code and shipped data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from ..errors import UnknownCharacter
from .bvh import parse_bvh, write_bvh
from .clip import MotionClip
from .retarget import JointMap, parse_jointmap, write_jointmap
from .skeleton import ROOT_CHANNELS, ZXY, Joint, Skeleton

CHARACTERS_DIR = Path(__file__).resolve().parent.parent / "characters"


@dataclass(frozen=True)
class CharacterInfo:
    character_id: str
    display_name: str
    height_cm: float

    def to_record(self) -> dict:
        return {
            "characterId": self.character_id,
            "displayName": self.display_name,
            "heightCm": self.height_cm,
        }


@dataclass(frozen=True)
class Character:
    info: CharacterInfo
    skeleton: Skeleton
    jointmap: JointMap


def _capsule(proportions: dict[str, tuple]) -> Skeleton:
    def j(name, children=(), end=None):
        return Joint(name, np.array(proportions[name], float), ZXY, list(children), end)

    hand_l = j("hand_l", end=np.array(proportions["hand_l_end"], float))
    fore_l = j("forearm_l", [hand_l])
    arm_l = j("upperarm_l", [fore_l])
    hand_r = j("hand_r", end=np.array(proportions["hand_r_end"], float))
    fore_r = j("forearm_r", [hand_r])
    arm_r = j("upperarm_r", [fore_r])
    skull = j("skull", end=np.array(proportions["skull_end"], float))
    neck = j("neck", [skull])
    spine_hi = j("spine_hi", [neck, arm_l, arm_r])
    spine_lo = j("spine_lo", [spine_hi])
    foot_l = j("foot_l", end=np.array(proportions["foot_l_end"], float))
    shin_l = j("shin_l", [foot_l])
    thigh_l = j("thigh_l", [shin_l])
    foot_r = j("foot_r", end=np.array(proportions["foot_r_end"], float))
    shin_r = j("shin_r", [foot_r])
    thigh_r = j("thigh_r", [shin_r])
    pelvis = Joint(
        "pelvis",
        np.array(proportions["pelvis"], float),
        ROOT_CHANNELS,
        [spine_lo, thigh_l, thigh_r],
    )
    return Skeleton(pelvis)


def build_adult_skeleton() -> Skeleton:
    # 178 cm, longer limbs and wider shoulders than the gesture skeleton
    return _capsule(
        {
            "pelvis": (0, 102, 0),
            "spine_lo": (0, 14, 0),
            "spine_hi": (0, 16, 0),
            "neck": (0, 16, 0),
            "skull": (0, 12, 0),
            "skull_end": (0, 18, 0),
            "upperarm_l": (14, 13, 0),
            "forearm_l": (30, 0, 0),
            "hand_l": (27, 0, 0),
            "hand_l_end": (15, 0, 0),
            "upperarm_r": (-14, 13, 0),
            "forearm_r": (-30, 0, 0),
            "hand_r": (-27, 0, 0),
            "hand_r_end": (-15, 0, 0),
            "thigh_l": (10, -5, 0),
            "shin_l": (0, -47, 0),
            "foot_l": (0, -46, 0),
            "foot_l_end": (0, -4, 15),
            "thigh_r": (-10, -5, 0),
            "shin_r": (0, -47, 0),
            "foot_r": (0, -46, 0),
            "foot_r_end": (0, -4, 15),
        }
    )


def build_kid_skeleton() -> Skeleton:
    # 120 cm with a proportionally bigger head and short limbs
    return _capsule(
        {
            "pelvis": (0, 64, 0),
            "spine_lo": (0, 9, 0),
            "spine_hi": (0, 10, 0),
            "neck": (0, 10, 0),
            "skull": (0, 9, 0),
            "skull_end": (0, 18, 0),
            "upperarm_l": (8, 8, 0),
            "forearm_l": (18, 0, 0),
            "hand_l": (16, 0, 0),
            "hand_l_end": (9, 0, 0),
            "upperarm_r": (-8, 8, 0),
            "forearm_r": (-18, 0, 0),
            "hand_r": (-16, 0, 0),
            "hand_r_end": (-9, 0, 0),
            "thigh_l": (6, -3, 0),
            "shin_l": (0, -29, 0),
            "foot_l": (0, -29, 0),
            "foot_l_end": (0, -3, 9),
            "thigh_r": (-6, -3, 0),
            "shin_r": (0, -29, 0),
            "foot_r": (0, -29, 0),
            "foot_r_end": (0, -3, 9),
        }
    )


DEFAULT_JOINTMAP = JointMap(
    {
        "Hips": "pelvis",
        "Spine": "spine_lo",
        "Spine1": "spine_hi",
        "Neck": "neck",
        "Head": "skull",
        "LeftArm": "upperarm_l",
        "LeftForeArm": "forearm_l",
        "LeftHand": "hand_l",
        "RightArm": "upperarm_r",
        "RightForeArm": "forearm_r",
        "RightHand": "hand_r",
        "LeftUpLeg": "thigh_l",
        "LeftLeg": "shin_l",
        "LeftFoot": "foot_l",
        "RightUpLeg": "thigh_r",
        "RightLeg": "shin_r",
        "RightFoot": "foot_r",
    }
)

_BUILDERS = {
    "capsule-adult": ("Capsule Adult", build_adult_skeleton),
    "capsule-kid": ("Capsule Kid", build_kid_skeleton),
}


def list_characters(base: Path | None = None) -> list[CharacterInfo]:
    base = base or CHARACTERS_DIR
    infos = []
    for meta_path in sorted(base.glob("*/meta.json")):
        meta = json.loads(meta_path.read_text())
        infos.append(
            CharacterInfo(meta["characterId"], meta["displayName"], float(meta["heightCm"]))
        )
    return infos


@lru_cache(maxsize=None)
def load_character(character_id: str, base: Path | None = None) -> Character:
    base = base or CHARACTERS_DIR
    cdir = base / character_id
    if not (cdir / "meta.json").is_file():
        raise UnknownCharacter(f"no bundled character named {character_id!r}")
    meta = json.loads((cdir / "meta.json").read_text())
    info = CharacterInfo(meta["characterId"], meta["displayName"], float(meta["heightCm"]))
    skeleton = parse_bvh((cdir / "skeleton.bvh").read_text()).skeleton
    jointmap = parse_jointmap((cdir / "jointmap.txt").read_text())
    return Character(info, skeleton, jointmap)


def rebuild_character_data(base: Path | None = None) -> None:
    """Regenerate the bundled character files from the builders."""
    base = base or CHARACTERS_DIR
    for cid, (display, builder) in _BUILDERS.items():
        skeleton = builder()
        cdir = base / cid
        cdir.mkdir(parents=True, exist_ok=True)
        rest = MotionClip(
            skeleton,
            np.zeros((1, len(skeleton), 3)),
            np.zeros((1, 3)),
            1.0 / 60.0,
        )
        (cdir / "skeleton.bvh").write_text(write_bvh(rest))
        (cdir / "jointmap.txt").write_text(write_jointmap(DEFAULT_JOINTMAP))
        meta = {
            "characterId": cid,
            "displayName": display,
            "heightCm": round(skeleton.height(), 3),
        }
        (cdir / "meta.json").write_text(json.dumps(meta, indent=2) + "\n")
