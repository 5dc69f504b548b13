"""Filesystem layout and atomic persistence for scene bundles.

One directory per scene under the data root:

    <root>/<scene_id>/scene.json          annotation, cast, per-line status
    <root>/<scene_id>/audio/line-<i>.wav  synthesized speech
    <root>/<scene_id>/motion/line-<i>.bvh gestures on the studio skeleton
    <root>/<scene_id>/anim/line-<i>.bvh   gestures retargeted to the cast model
    <root>/<scene_id>/camera/line-<i>.json

Writes go through a temp file and os.replace so readers never observe a
half-written scene.json, and a per-scene busy token keeps two generation
jobs from interleaving writes to the same bundle.
"""

from __future__ import annotations

import json
import os
import re
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path

from ..errors import AssetNotFound, SceneBusy, SceneNotFound
from ..model import SceneBundle, decode_bundle, encode_bundle

_SCENE_ID_RE = re.compile(r"[A-Za-z0-9][A-Za-z0-9_-]{0,63}")


def new_scene_id() -> str:
    return uuid.uuid4().hex[:12]


class SceneStore:
    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._busy: set[str] = set()
        self._lock = threading.Lock()

    # -- paths ----------------------------------------------------------

    def scene_dir(self, scene_id: str) -> Path:
        if not _SCENE_ID_RE.fullmatch(scene_id):
            raise SceneNotFound(f"no scene {scene_id!r}")
        return self.root / scene_id

    def _existing_dir(self, scene_id: str) -> Path:
        path = self.scene_dir(scene_id)
        if not (path / "scene.json").is_file():
            raise SceneNotFound(f"no scene {scene_id!r}")
        return path

    def audio_path(self, scene_id: str, index: int) -> Path:
        return self._existing_dir(scene_id) / "audio" / f"line-{index}.wav"

    def motion_path(self, scene_id: str, index: int) -> Path:
        return self._existing_dir(scene_id) / "motion" / f"line-{index}.bvh"

    def anim_path(self, scene_id: str, index: int) -> Path:
        return self._existing_dir(scene_id) / "anim" / f"line-{index}.bvh"

    def camera_path(self, scene_id: str, index: int) -> Path:
        return self._existing_dir(scene_id) / "camera" / f"line-{index}.json"

    def asset_path(self, scene_id: str, kind: str, index: int) -> Path:
        path = {
            "audio": self.audio_path,
            "motion": self.anim_path,  # clients get the retargeted clip
            "camera": self.camera_path,
        }[kind](scene_id, index)
        if not path.is_file():
            raise AssetNotFound(f"line {index} has no {kind} asset yet")
        return path

    # -- bundle IO ------------------------------------------------------

    def exists(self, scene_id: str) -> bool:
        try:
            self._existing_dir(scene_id)
        except SceneNotFound:
            return False
        return True

    def save_bundle(self, bundle: SceneBundle) -> None:
        scene = self.scene_dir(bundle.scene_id)
        scene.mkdir(parents=True, exist_ok=True)
        self._atomic_write(scene / "scene.json", encode_bundle(bundle))

    def load_bundle(self, scene_id: str) -> SceneBundle:
        path = self._existing_dir(scene_id) / "scene.json"
        return decode_bundle(scene_id, path.read_text(encoding="utf-8"))

    def write_asset(self, path: Path, data: bytes | str) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(data, str):
            data = data.encode("utf-8")
        self._atomic_write_bytes(path, data)

    def _atomic_write(self, path: Path, text: str) -> None:
        self._atomic_write_bytes(path, text.encode("utf-8"))

    def _atomic_write_bytes(self, path: Path, data: bytes) -> None:
        tmp = path.with_suffix(path.suffix + f".tmp-{os.getpid()}-{threading.get_ident()}")
        tmp.write_bytes(data)
        os.replace(tmp, path)

    # -- listing --------------------------------------------------------

    def list_scenes(self) -> list[dict]:
        rows = []
        for meta in self.root.glob("*/scene.json"):
            scene_id = meta.parent.name
            try:
                record = json.loads(meta.read_text(encoding="utf-8"))
                title = record["summary"]["title"]
            except (json.JSONDecodeError, KeyError, OSError):
                continue
            created = datetime.fromtimestamp(meta.stat().st_mtime, tz=timezone.utc)
            rows.append(
                {
                    "sceneId": scene_id,
                    "title": title,
                    "createdAt": created.isoformat(timespec="seconds").replace("+00:00", "Z"),
                }
            )
        rows.sort(key=lambda r: r["createdAt"], reverse=True)
        return rows

    # -- single-writer token ---------------------------------------------

    def acquire(self, scene_id: str) -> None:
        with self._lock:
            if scene_id in self._busy:
                raise SceneBusy(f"scene {scene_id} already has a job running")
            self._busy.add(scene_id)

    def release(self, scene_id: str) -> None:
        with self._lock:
            self._busy.discard(scene_id)
