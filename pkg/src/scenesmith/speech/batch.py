"""Parallel per-line synthesis with order-preserving result gathering."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..errors import BatchEmpty, ScenesmithError
from .audio import AudioClip
from .providers import TTSProvider


@dataclass(frozen=True)
class BatchItemError:
    index: int
    code: str
    message: str


@dataclass
class BatchResult:
    """Index-aligned clips; failed indices hold None and carry an error record."""

    clips: list[AudioClip | None]
    errors: list[BatchItemError] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def synthesize_batch(
    items: list[tuple[str, str, str]],
    provider: TTSProvider,
    concurrency: int = 4,
) -> BatchResult:
    """Synthesize (speech_text, voice_id, style) items with up to `concurrency`
    in flight.  Output order always matches input order; a failing item is
    reported by index without disturbing the others.
    """
    if not items:
        raise BatchEmpty("no lines to synthesize")

    clips: list[AudioClip | None] = [None] * len(items)
    errors: list[BatchItemError] = []

    def run(idx: int):
        text, voice_id, style = items[idx]
        return provider.synthesize(text, voice_id, style)

    with ThreadPoolExecutor(max_workers=max(1, concurrency)) as pool:
        futures = {i: pool.submit(run, i) for i in range(len(items))}
        for i in range(len(items)):
            try:
                clips[i] = futures[i].result()
            except ScenesmithError as e:
                errors.append(BatchItemError(i, e.code, str(e)))
            except Exception as e:  # provider bugs must not kill sibling lines
                errors.append(BatchItemError(i, "internal", f"{type(e).__name__}: {e}"))
    return BatchResult(clips=clips, errors=errors)
