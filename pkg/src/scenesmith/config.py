"""Environment-driven configuration. All knobs use the S2S_ prefix."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path


def _env(name: str, default: str = "") -> str:
    return os.environ.get(name, default)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@dataclass
class Settings:
    """Snapshot of the environment at construction time."""

    data_dir: Path = field(default_factory=lambda: Path(_env("S2S_DATA_DIR", "./scenes")))
    port: int = 8000
    concurrency: int = 4

    llm_api_key: str = ""
    llm_base_url: str = ""
    llm_model: str = ""

    tts_provider: str = "offline"
    tts_api_key: str = ""
    tts_base_url: str = ""

    gesture_adapter: str = "procedural"
    gesture_endpoint: str = ""

    kernels: str = "numba"

    @classmethod
    def from_env(cls) -> "Settings":
        s = cls(
            data_dir=Path(_env("S2S_DATA_DIR", "./scenes")),
            port=_env_int("S2S_PORT", 8000),
            concurrency=_env_int("S2S_CONCURRENCY", 4),
            llm_api_key=_env("S2S_LLM_API_KEY"),
            llm_base_url=_env("S2S_LLM_BASE_URL"),
            llm_model=_env("S2S_LLM_MODEL"),
            tts_provider=_env("S2S_TTS_PROVIDER", "offline"),
            tts_api_key=_env("S2S_TTS_API_KEY"),
            tts_base_url=_env("S2S_TTS_BASE_URL"),
            gesture_adapter=_env("S2S_GESTURE_ADAPTER", "procedural"),
            gesture_endpoint=_env("S2S_GESTURE_ENDPOINT"),
            kernels=_env("S2S_KERNELS", "numba"),
        )
        if s.tts_provider not in ("offline", "remote"):
            raise ValueError(f"S2S_TTS_PROVIDER must be offline or remote, got {s.tts_provider!r}")
        if s.gesture_adapter not in ("procedural", "external"):
            raise ValueError(
                f"S2S_GESTURE_ADAPTER must be procedural or external, got {s.gesture_adapter!r}"
            )
        if s.kernels not in ("numba", "numpy"):
            raise ValueError(f"S2S_KERNELS must be numba or numpy, got {s.kernels!r}")
        if s.concurrency < 1:
            raise ValueError("S2S_CONCURRENCY must be >= 1")
        return s
