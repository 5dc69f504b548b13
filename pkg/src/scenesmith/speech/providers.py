"""Text-to-speech provider interface plus the offline and remote backends."""

from __future__ import annotations

import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass

import httpx

from ..errors import ProviderTimeout, ProviderUnavailable
from .audio import AudioClip, read_wav_bytes
from .offline import synthesize_offline


@dataclass(frozen=True)
class Voice:
    voice_id: str
    display_name: str
    provider: str

    def to_record(self) -> dict:
        return {
            "voiceId": self.voice_id,
            "displayName": self.display_name,
            "provider": self.provider,
        }


class TTSProvider(ABC):
    """A speech backend: a voice catalog and per-line synthesis."""

    name: str = "abstract"

    @abstractmethod
    def list_voices(self) -> list[Voice]:
        raise NotImplementedError

    @abstractmethod
    def synthesize(self, speech_text: str, voice_id: str, style: str) -> AudioClip:
        raise NotImplementedError


OFFLINE_VOICES = (
    Voice("stub-f1", "Stub Female 1", "offline"),
    Voice("stub-f2", "Stub Female 2", "offline"),
    Voice("stub-m1", "Stub Male 1", "offline"),
    Voice("stub-m2", "Stub Male 2", "offline"),
)


class OfflineTTS(TTSProvider):
    """Deterministic tone synthesizer; no network, bit-stable output."""

    name = "offline"

    def list_voices(self) -> list[Voice]:
        return list(OFFLINE_VOICES)

    def synthesize(self, speech_text: str, voice_id: str, style: str) -> AudioClip:
        return synthesize_offline(speech_text, voice_id, style)


class RemoteTTS(TTSProvider):
    """HTTP speech backend: GET /voices for the catalog, POST /synthesize for audio.

    The style tag is forwarded as an opaque hint; providers that cannot use
    it simply ignore the field.
    """

    name = "remote"

    def __init__(
        self,
        base_url: str,
        api_key: str = "",
        client: httpx.Client | None = None,
        max_concurrent: int = 4,
        timeout: float = 30.0,
    ):
        if not base_url:
            raise ProviderUnavailable("remote TTS requires S2S_TTS_BASE_URL")
        self.base_url = base_url.rstrip("/")
        headers = {"Authorization": f"Bearer {api_key}"} if api_key else {}
        self._client = client or httpx.Client(timeout=timeout, headers=headers)
        self._gate = threading.Semaphore(max_concurrent)

    def _request(self, method: str, path: str, **kw) -> httpx.Response:
        with self._gate:
            try:
                resp = self._client.request(method, self.base_url + path, **kw)
            except httpx.TimeoutException as e:
                raise ProviderTimeout(str(e)) from e
            except httpx.HTTPError as e:
                raise ProviderUnavailable(str(e)) from e
        if resp.status_code >= 400:
            raise ProviderUnavailable(
                f"TTS endpoint returned {resp.status_code}", status=resp.status_code
            )
        return resp

    def list_voices(self) -> list[Voice]:
        data = self._request("GET", "/voices").json()
        return [
            Voice(v["voiceId"], v.get("displayName", v["voiceId"]), self.name) for v in data
        ]

    def synthesize(self, speech_text: str, voice_id: str, style: str) -> AudioClip:
        resp = self._request(
            "POST",
            "/synthesize",
            json={"text": speech_text, "voiceId": voice_id, "style": style},
        )
        return read_wav_bytes(resp.content)


def make_tts_provider(kind: str, base_url: str = "", api_key: str = "") -> TTSProvider:
    if kind == "offline":
        return OfflineTTS()
    if kind == "remote":
        return RemoteTTS(base_url, api_key)
    raise ValueError(f"unknown TTS provider {kind!r}")
