"""BVH 1.0 text reader/writer.

The parser is total: any input, however mangled, yields a structured
BvhError carrying a line number rather than an unhandled exception.
Channel order is preserved exactly as declared, so write(parse(x))
reproduces x's channel layout.
"""

from __future__ import annotations

import numpy as np

from ..errors import (
    BvhSyntaxError,
    ChannelCountMismatch,
    EmptyClip,
    FrameCountMismatch,
)
from .clip import MotionClip
from .skeleton import Joint, Skeleton

_POSITION = ("Xposition", "Yposition", "Zposition")
_ROTATION = ("Xrotation", "Yrotation", "Zrotation")
_KNOWN_CHANNELS = frozenset(_POSITION + _ROTATION)


class _Cursor:
    """Non-blank lines with 1-based numbers; a single lookahead slot."""

    def __init__(self, text: str):
        self.rows = [
            (i + 1, line.split()) for i, line in enumerate(text.splitlines()) if line.strip()
        ]
        self.pos = 0

    def peek(self):
        if self.pos >= len(self.rows):
            return None
        return self.rows[self.pos]

    def take(self, expected: str):
        row = self.peek()
        if row is None:
            raise BvhSyntaxError(self.rows[-1][0] + 1 if self.rows else 1, expected)
        self.pos += 1
        return row


def _floats(tokens: list[str], lineno: int, count: int, expected: str) -> np.ndarray:
    if len(tokens) != count:
        raise BvhSyntaxError(lineno, expected)
    try:
        return np.array([float(t) for t in tokens], dtype=np.float64)
    except ValueError:
        raise BvhSyntaxError(lineno, expected) from None


def _parse_joint(cur: _Cursor, name: str, is_root: bool) -> Joint:
    lineno, tokens = cur.take("{")
    if tokens != ["{"]:
        raise BvhSyntaxError(lineno, "{")
    lineno, tokens = cur.take("OFFSET")
    if not tokens or tokens[0] != "OFFSET":
        raise BvhSyntaxError(lineno, "OFFSET")
    offset = _floats(tokens[1:], lineno, 3, "OFFSET with 3 numbers")

    lineno, tokens = cur.take("CHANNELS")
    if not tokens or tokens[0] != "CHANNELS":
        raise BvhSyntaxError(lineno, "CHANNELS")
    try:
        declared = int(tokens[1])
    except (IndexError, ValueError):
        raise BvhSyntaxError(lineno, "CHANNELS with a count") from None
    names = tokens[2:]
    if len(names) != declared:
        raise BvhSyntaxError(lineno, f"{declared} channel names")
    for ch in names:
        if ch not in _KNOWN_CHANNELS:
            raise BvhSyntaxError(lineno, "channel name")
    rot = [c for c in names if c in _ROTATION]
    if is_root:
        pos = [c for c in names if c in _POSITION]
        if declared != 6 or sorted(pos) != sorted(_POSITION) or len(set(rot)) != 3:
            raise BvhSyntaxError(lineno, "root with 3 position + 3 rotation channels")
    else:
        if declared != 3 or len(set(rot)) != 3:
            raise BvhSyntaxError(lineno, "3 distinct rotation channels")

    children: list[Joint] = []
    end_site: np.ndarray | None = None
    while True:
        lineno, tokens = cur.take("JOINT, End Site, or }")
        if tokens == ["}"]:
            break
        if tokens[0] == "JOINT":
            if len(tokens) < 2:
                raise BvhSyntaxError(lineno, "JOINT with a name")
            children.append(_parse_joint(cur, " ".join(tokens[1:]), is_root=False))
        elif tokens[:2] == ["End", "Site"]:
            lineno, tokens = cur.take("{")
            if tokens != ["{"]:
                raise BvhSyntaxError(lineno, "{")
            lineno, tokens = cur.take("OFFSET")
            if not tokens or tokens[0] != "OFFSET":
                raise BvhSyntaxError(lineno, "OFFSET")
            end_site = _floats(tokens[1:], lineno, 3, "OFFSET with 3 numbers")
            lineno, tokens = cur.take("}")
            if tokens != ["}"]:
                raise BvhSyntaxError(lineno, "}")
        else:
            raise BvhSyntaxError(lineno, "JOINT, End Site, or }")

    channels = tuple(names)
    return Joint(name, offset, channels, children, end_site)


def parse_bvh(text: str) -> MotionClip:
    if not isinstance(text, str):
        raise BvhSyntaxError(1, "text input")
    cur = _Cursor(text)

    lineno, tokens = cur.take("HIERARCHY")
    if tokens != ["HIERARCHY"]:
        raise BvhSyntaxError(lineno, "HIERARCHY")
    lineno, tokens = cur.take("ROOT")
    if not tokens or tokens[0] != "ROOT" or len(tokens) < 2:
        raise BvhSyntaxError(lineno, "ROOT with a name")
    root = _parse_joint(cur, " ".join(tokens[1:]), is_root=True)
    try:
        skeleton = Skeleton(root)
    except ValueError as e:
        raise BvhSyntaxError(lineno, str(e)) from None

    lineno, tokens = cur.take("MOTION")
    if tokens != ["MOTION"]:
        raise BvhSyntaxError(lineno, "MOTION")
    lineno, tokens = cur.take("Frames:")
    if len(tokens) != 2 or tokens[0] != "Frames:":
        raise BvhSyntaxError(lineno, "Frames: <count>")
    try:
        n_frames = int(tokens[1])
    except ValueError:
        raise BvhSyntaxError(lineno, "Frames: <count>") from None
    if n_frames < 0:
        raise BvhSyntaxError(lineno, "non-negative frame count")
    lineno, tokens = cur.take("Frame Time: <seconds>")
    if len(tokens) != 3 or tokens[:2] != ["Frame", "Time:"]:
        raise BvhSyntaxError(lineno, "Frame Time: <seconds>")
    try:
        frame_time = float(tokens[2])
    except ValueError:
        raise BvhSyntaxError(lineno, "Frame Time: <seconds>") from None
    if not np.isfinite(frame_time) or frame_time <= 0:
        raise BvhSyntaxError(lineno, "positive frame time")

    n_channels = skeleton.n_channels
    rows = np.empty((n_frames, n_channels), dtype=np.float64)
    for f in range(n_frames):
        row = cur.peek()
        if row is None:
            raise FrameCountMismatch(f"declared {n_frames} frames, found {f}")
        lineno, tokens = row
        cur.pos += 1
        if len(tokens) != n_channels:
            raise ChannelCountMismatch(
                f"line {lineno}: expected {n_channels} values, found {len(tokens)}"
            )
        try:
            rows[f] = [float(t) for t in tokens]
        except ValueError:
            raise BvhSyntaxError(lineno, "numeric channel row") from None
    extra = cur.peek()
    if extra is not None:
        raise FrameCountMismatch(
            f"declared {n_frames} frames, found extra data at line {extra[0]}"
        )
    if n_frames == 0:
        raise EmptyClip("BVH declares zero frames")

    rotations = np.empty((n_frames, len(skeleton), 3), dtype=np.float64)
    root_positions = np.empty((n_frames, 3), dtype=np.float64)
    col = 0
    for j, joint in enumerate(skeleton.joints):
        r = 0
        for ch in joint.channels:
            if ch in _POSITION:
                root_positions[:, _POSITION.index(ch)] = rows[:, col]
            else:
                rotations[:, j, r] = rows[:, col]
                r += 1
            col += 1
    return MotionClip(skeleton, rotations, root_positions, frame_time)


def _write_joint(joint: Joint, keyword: str, depth: int, out: list[str]):
    pad = "  " * depth
    out.append(f"{pad}{keyword} {joint.name}")
    out.append(f"{pad}{{")
    inner = "  " * (depth + 1)
    ox, oy, oz = joint.offset
    out.append(f"{inner}OFFSET {ox:.6f} {oy:.6f} {oz:.6f}")
    out.append(f"{inner}CHANNELS {len(joint.channels)} {' '.join(joint.channels)}")
    for child in joint.children:
        _write_joint(child, "JOINT", depth + 1, out)
    if joint.end_site is not None:
        ex, ey, ez = joint.end_site
        out.append(f"{inner}End Site")
        out.append(f"{inner}{{")
        out.append(f"{inner}  OFFSET {ex:.6f} {ey:.6f} {ez:.6f}")
        out.append(f"{inner}}}")
    out.append(f"{pad}}}")


def write_bvh(clip: MotionClip) -> str:
    if clip.n_frames == 0:
        raise EmptyClip("cannot serialize a clip with no frames")
    out: list[str] = ["HIERARCHY"]
    _write_joint(clip.skeleton.root, "ROOT", 0, out)
    out.append("MOTION")
    out.append(f"Frames: {clip.n_frames}")
    out.append(f"Frame Time: {clip.frame_time!r}")
    for f in range(clip.n_frames):
        vals: list[str] = []
        for j, joint in enumerate(clip.skeleton.joints):
            r = 0
            for ch in joint.channels:
                if ch in _POSITION:
                    v = clip.root_positions[f, _POSITION.index(ch)]
                else:
                    v = clip.rotations[f, j, r]
                    r += 1
                vals.append(f"{v:.6f}")
        out.append(" ".join(vals))
    return "\n".join(out) + "\n"
