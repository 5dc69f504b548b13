from .bvh import parse_bvh, write_bvh
from .characters import (
    Character,
    CharacterInfo,
    list_characters,
    load_character,
    rebuild_character_data,
)
from .clip import MotionClip
from .fk import fk_all_frames, forward_kinematics, local_rotation_matrices
from .retarget import JointMap, matrices_to_euler, parse_jointmap, retarget, write_jointmap
from .skeleton import CANONICAL_JOINT_COUNT, Joint, Skeleton, canonical_skeleton

__all__ = [
    "parse_bvh",
    "write_bvh",
    "Character",
    "CharacterInfo",
    "list_characters",
    "load_character",
    "rebuild_character_data",
    "MotionClip",
    "fk_all_frames",
    "forward_kinematics",
    "local_rotation_matrices",
    "JointMap",
    "matrices_to_euler",
    "parse_jointmap",
    "retarget",
    "write_jointmap",
    "CANONICAL_JOINT_COUNT",
    "Joint",
    "Skeleton",
    "canonical_skeleton",
]
