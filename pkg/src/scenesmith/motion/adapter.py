"""Gesture generator seam: the procedural model or an external process/endpoint."""

from __future__ import annotations

import subprocess
from abc import ABC, abstractmethod

import httpx

from ..errors import AdapterOutputInvalid, AdapterUnavailable
from ..kinematics.bvh import parse_bvh
from ..kinematics.clip import MotionClip
from ..kinematics.skeleton import canonical_skeleton
from ..speech.audio import AudioClip, write_wav_bytes
from .gestures import synthesize_gestures

_CANONICAL_NAMES = canonical_skeleton().names


class GestureAdapter(ABC):
    kind: str = "abstract"

    @abstractmethod
    def generate(self, audio: AudioClip, style: str) -> MotionClip:
        raise NotImplementedError


class ProceduralAdapter(GestureAdapter):
    kind = "procedural"

    def generate(self, audio: AudioClip, style: str) -> MotionClip:
        return synthesize_gestures(audio, style)


def _validate_external(clip: MotionClip, audio: AudioClip) -> MotionClip:
    if clip.skeleton.names != _CANONICAL_NAMES:
        raise AdapterOutputInvalid(
            "external generator returned a non-canonical skeleton "
            f"({len(clip.skeleton)} joints)"
        )
    if abs(clip.duration - audio.duration) > clip.frame_time + 1e-9:
        raise AdapterOutputInvalid(
            f"motion duration {clip.duration:.3f}s vs audio {audio.duration:.3f}s "
            "differs by more than one frame"
        )
    return clip


class ExternalAdapter(GestureAdapter):
    """Bridges to a user-supplied generator.

    An http(s) endpoint receives POSTed WAV bytes with the style in the
    X-Gesture-Style header; anything else is treated as an executable
    invoked as `cmd <style>` with WAV on stdin.  Either returns BVH text.
    """

    kind = "external"

    def __init__(self, endpoint: str, timeout: float = 60.0):
        if not endpoint:
            raise AdapterUnavailable("external adapter requires S2S_GESTURE_ENDPOINT")
        self.endpoint = endpoint
        self.timeout = timeout

    def _fetch(self, wav: bytes, style: str) -> str:
        if self.endpoint.startswith(("http://", "https://")):
            try:
                resp = httpx.post(
                    self.endpoint,
                    content=wav,
                    headers={"X-Gesture-Style": style, "Content-Type": "audio/wav"},
                    timeout=self.timeout,
                )
            except httpx.HTTPError as e:
                raise AdapterUnavailable(f"gesture endpoint unreachable: {e}") from e
            if resp.status_code >= 400:
                raise AdapterUnavailable(f"gesture endpoint returned {resp.status_code}")
            return resp.text
        try:
            proc = subprocess.run(
                [self.endpoint, style],
                input=wav,
                capture_output=True,
                timeout=self.timeout,
            )
        except (OSError, subprocess.TimeoutExpired) as e:
            raise AdapterUnavailable(f"gesture command failed to run: {e}") from e
        if proc.returncode != 0:
            raise AdapterUnavailable(
                f"gesture command exited {proc.returncode}: {proc.stderr.decode(errors='replace')[:200]}"
            )
        return proc.stdout.decode(errors="replace")

    def generate(self, audio: AudioClip, style: str) -> MotionClip:
        text = self._fetch(write_wav_bytes(audio), style)
        try:
            clip = parse_bvh(text)
        except Exception as e:
            raise AdapterOutputInvalid(f"external generator returned unparseable BVH: {e}") from e
        return _validate_external(clip, audio)


def make_gesture_adapter(kind: str, endpoint: str = "") -> GestureAdapter:
    if kind == "procedural":
        return ProceduralAdapter()
    if kind == "external":
        return ExternalAdapter(endpoint)
    raise ValueError(f"unknown gesture adapter {kind!r}")


def gesture_adapter(audio: AudioClip, style: str, adapter: GestureAdapter) -> MotionClip:
    return adapter.generate(audio, style)
