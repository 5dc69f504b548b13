"""Language-model provider seam: remote chat endpoint, fixture replay, local rules."""

from __future__ import annotations

import hashlib
import json
import re
import threading
from abc import ABC, abstractmethod
from pathlib import Path

import httpx

from ..errors import ProviderTimeout, ProviderUnavailable, UnparseableResponse
from ..model import RawScript, encode_json, parse_speaker_lines
from .heuristics import fallback_records, fallback_summary
from .prompts import SCRIPT_MARKER


class LLMProvider(ABC):
    name: str = "abstract"

    @abstractmethod
    def complete(self, prompt: str) -> str:
        raise NotImplementedError


class RemoteLLM(LLMProvider):
    """Chat-completion-style HTTP endpoint (base URL + model + API key)."""

    name = "remote"

    def __init__(
        self,
        base_url: str,
        model: str,
        api_key: str = "",
        client: httpx.Client | None = None,
        max_concurrent: int = 4,
        timeout: float = 60.0,
    ):
        if not base_url:
            raise ProviderUnavailable("remote annotation requires S2S_LLM_BASE_URL")
        if not model:
            raise ProviderUnavailable("remote annotation requires S2S_LLM_MODEL")
        self.base_url = base_url.rstrip("/")
        self.model = model
        headers = {"Authorization": f"Bearer {api_key}"} if api_key else {}
        self._client = client or httpx.Client(timeout=timeout, headers=headers)
        self._gate = threading.Semaphore(max_concurrent)

    def complete(self, prompt: str) -> str:
        body = {"model": self.model, "messages": [{"role": "user", "content": prompt}]}
        with self._gate:
            try:
                resp = self._client.post(self.base_url + "/chat/completions", json=body)
            except httpx.TimeoutException as e:
                raise ProviderTimeout(str(e)) from e
            except httpx.HTTPError as e:
                raise ProviderUnavailable(str(e)) from e
        if resp.status_code >= 400:
            raise ProviderUnavailable(
                f"annotation endpoint returned {resp.status_code}", status=resp.status_code
            )
        try:
            return resp.json()["choices"][0]["message"]["content"]
        except (json.JSONDecodeError, KeyError, IndexError, TypeError) as e:
            raise UnparseableResponse(f"malformed completion envelope: {e}") from e


def prompt_key(prompt: str) -> str:
    return hashlib.sha256(prompt.encode()).hexdigest()[:16]


class ReplayProvider(LLMProvider):
    """Serves canned responses from a directory of prompt-hash -> text files."""

    name = "replay"

    def __init__(self, fixture_dir: str | Path):
        self.fixture_dir = Path(fixture_dir)

    def _path(self, prompt: str) -> Path:
        return self.fixture_dir / f"{prompt_key(prompt)}.txt"

    def complete(self, prompt: str) -> str:
        path = self._path(prompt)
        if not path.is_file():
            raise ProviderUnavailable(
                f"no recorded response for prompt {prompt_key(prompt)} in {self.fixture_dir}"
            )
        return path.read_text()

    def record(self, prompt: str, response: str) -> Path:
        self.fixture_dir.mkdir(parents=True, exist_ok=True)
        path = self._path(prompt)
        path.write_text(response)
        return path


_REGEN_STYLE_RE = re.compile(
    r"to reflect the specified emotion, (?P<style>.+?), based on the context"
)


class LocalHeuristicProvider(LLMProvider):
    """Fully offline provider: answers the three prompt shapes with the
    rule-based annotations, so the whole pipeline runs without a network.
    """

    name = "offline"

    def _script_from(self, prompt: str) -> RawScript:
        _, _, tail = prompt.rpartition(SCRIPT_MARKER)
        return RawScript(tail.strip())

    def complete(self, prompt: str) -> str:
        if prompt.startswith("Summarize the script"):
            parsed = parse_speaker_lines(self._script_from(prompt))
            return encode_json(fallback_summary(parsed).to_record())
        m = _REGEN_STYLE_RE.search(prompt)
        if m and prompt.lstrip().startswith("{"):
            head, _, _ = prompt.partition('\n\nPlease update the fields "speech"')
            record = json.loads(head)
            style = m.group("style")
            record["style"] = style
            record["emotionAnalysis"] = f"Adjusted to read as {style.lower()}."
            record["shotAnalysis"] = (
                "Shot kept as before; the delivery change does not alter coverage."
            )
            return encode_json(record)
        parsed = parse_speaker_lines(self._script_from(prompt))
        return encode_json(fallback_records(parsed))


def make_llm_provider(
    kind: str, base_url: str = "", model: str = "", api_key: str = ""
) -> LLMProvider:
    if kind == "offline":
        return LocalHeuristicProvider()
    if kind == "remote":
        return RemoteLLM(base_url, model, api_key)
    raise ValueError(f"unknown annotation provider {kind!r}")
