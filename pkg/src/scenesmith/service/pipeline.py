"""Scene generation pipeline: annotate once, then fan out per line.

Scene creation runs synchronously (annotation plus summary plus cast
assignment) and persists a bundle whose lines are all pending.  Asset
generation runs per line through four stages (speech, gesture, retarget,
camera placement), fanned out across a thread pool, with progress pushed
to a job record and the bundle's per-line status persisted after every
transition so readers always see live state.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..annotate import (
    LLMProvider,
    annotate_script,
    make_llm_provider,
    regenerate_line,
    summarize_script,
)
from ..camera import CameraPose, SubjectBounds, frame_subject, two_shot_layout
from ..config import Settings
from ..errors import CastIncomplete, EmptySpeech, IndexOutOfRange, ScenesmithError
from ..kinematics import retarget, write_bvh
from ..kinematics.characters import Character, list_characters, load_character
from ..model import (
    CastAssignment,
    CastEntry,
    LineStatus,
    RawScript,
    SceneBundle,
    encode_json,
    parse_speaker_lines,
)
from ..motion.adapter import GestureAdapter, make_gesture_adapter
from ..speech import TTSProvider, make_tts_provider, write_wav_bytes
from ..vocab import check_style
from .jobs import Job, JobRegistry
from .store import SceneStore, new_scene_id

PAIR_HALF_SPACING = 0.6  # metres from midline when two speakers share a scene


@dataclass
class Runtime:
    settings: Settings
    llm: LLMProvider
    tts: TTSProvider
    adapter: GestureAdapter


def build_runtime(settings: Settings) -> Runtime:
    llm_kind = "remote" if settings.llm_base_url else "offline"
    return Runtime(
        settings=settings,
        llm=make_llm_provider(
            llm_kind, settings.llm_base_url, settings.llm_model, settings.llm_api_key
        ),
        tts=make_tts_provider(settings.tts_provider, settings.tts_base_url, settings.tts_api_key),
        adapter=make_gesture_adapter(settings.gesture_adapter, settings.gesture_endpoint),
    )


def default_cast(speakers: list[str], runtime: Runtime) -> CastAssignment:
    """Round-robin the available voices and character models over speakers."""
    voices = runtime.tts.list_voices()
    characters = list_characters()
    if not voices or not characters:
        raise CastIncomplete("no voices or character models available for a default cast")
    cast = CastAssignment()
    for i, speaker in enumerate(speakers):
        cast[speaker] = CastEntry(
            voice_id=voices[i % len(voices)].voice_id,
            model_id=characters[i % len(characters)].character_id,
        )
    return cast


def create_scene(
    store: SceneStore,
    script_text: str,
    runtime: Runtime,
    cast_record: dict | None = None,
    scene_id: str | None = None,
    source_name: str = "request",
) -> tuple[SceneBundle, list[str]]:
    script = RawScript(script_text, source_name=source_name)
    parsed = parse_speaker_lines(script)

    lines, warnings = annotate_script(script, runtime.llm)
    summary, summary_warnings = summarize_script(script, runtime.llm)
    warnings.extend(summary_warnings)

    if cast_record:
        cast = CastAssignment.from_record(cast_record)
        missing = cast.missing_speakers(parsed.speakers)
        if missing:
            raise CastIncomplete(f"cast is missing speakers: {', '.join(missing)}")
    else:
        cast = default_cast(parsed.speakers, runtime)
    for speaker, entry in cast.items():
        load_character(entry.model_id)  # UnknownCharacter if the model id is bogus

    bundle = SceneBundle(
        scene_id=scene_id or new_scene_id(),
        summary=summary,
        lines=lines,
        cast=cast,
    )
    store.save_bundle(bundle)
    return bundle, warnings


# -- camera planning ---------------------------------------------------------


def _counterpart(bundle: SceneBundle, index: int) -> str | None:
    """The most recent other speaker before the line, else the next one after."""
    speaker = bundle.lines[index].id
    for j in range(index - 1, -1, -1):
        if bundle.lines[j].id != speaker:
            return bundle.lines[j].id
    for j in range(index + 1, len(bundle.lines)):
        if bundle.lines[j].id != speaker:
            return bundle.lines[j].id
    return None


def _first_appearance(bundle: SceneBundle, speaker: str) -> int:
    for i, line in enumerate(bundle.lines):
        if line.id == speaker:
            return i
    return len(bundle.lines)


def plan_camera(bundle: SceneBundle, index: int, heights: dict[str, float]) -> CameraPose:
    """Camera pose for one line given each speaker's standing height in metres.

    A lone speaker stands at the origin facing the camera.  A conversing
    pair stands on the x axis, the earlier-introduced speaker on the left,
    and gets over-the-shoulder coverage: long shots back off until both
    subjects fit the frame, closer shots stay tight on the speaker.
    """
    line = bundle.lines[index]
    speaker_h = heights[line.id]
    other = _counterpart(bundle, index)
    if other is None:
        bounds = SubjectBounds(np.zeros(3), speaker_h)
        return frame_subject(bounds, line.shot_type, line.shot_angle)

    if _first_appearance(bundle, line.id) < _first_appearance(bundle, other):
        speaker_x, other_x = -PAIR_HALF_SPACING, PAIR_HALF_SPACING
    else:
        speaker_x, other_x = PAIR_HALF_SPACING, -PAIR_HALF_SPACING
    speaker_bounds = SubjectBounds(np.array([speaker_x, 0.0, 0.0]), speaker_h)
    other_bounds = SubjectBounds(np.array([other_x, 0.0, 0.0]), heights[other])
    return two_shot_layout(
        speaker_bounds,
        other_bounds,
        line.shot_type,
        line.shot_angle,
        fit_both=(line.shot_type == "Long shot"),
    )


# -- per-line asset generation ------------------------------------------------


def _cast_heights(bundle: SceneBundle) -> tuple[dict[str, float], dict[str, Character]]:
    heights: dict[str, float] = {}
    models: dict[str, Character] = {}
    for speaker, entry in bundle.cast.items():
        character = load_character(entry.model_id)
        models[speaker] = character
        heights[speaker] = character.info.height_cm / 100.0
    return heights, models


def generate_line_assets(
    store: SceneStore,
    bundle: SceneBundle,
    index: int,
    runtime: Runtime,
    heights: dict[str, float],
    models: dict[str, Character],
    on_stage=lambda stage: None,
    set_status=lambda status: None,
) -> None:
    line = bundle.lines[index]
    entry = bundle.cast.get(line.id)
    if entry is None:
        raise CastIncomplete(f"no cast entry for speaker {line.id!r}")
    character = models[line.id]

    on_stage("speech")
    clip = runtime.tts.synthesize(line.speech, entry.voice_id, line.style)
    store.write_asset(store.audio_path(bundle.scene_id, index), write_wav_bytes(clip))
    set_status(LineStatus("audio_ready"))

    on_stage("gesture")
    motion = runtime.adapter.generate(clip, line.style)
    store.write_asset(store.motion_path(bundle.scene_id, index), write_bvh(motion))

    on_stage("retarget")
    anim = retarget(motion, character.skeleton, character.jointmap)
    store.write_asset(store.anim_path(bundle.scene_id, index), write_bvh(anim))

    pose = plan_camera(bundle, index, heights)
    store.write_asset(
        store.camera_path(bundle.scene_id, index), encode_json(pose.to_record())
    )


def run_generation(
    store: SceneStore,
    runtime: Runtime,
    registry: JobRegistry,
    job: Job,
    indices: list[int] | None = None,
) -> None:
    """Execute a job the caller has already acquired the scene token for."""
    try:
        bundle = store.load_bundle(job.scene_id)
        heights, models = _cast_heights(bundle)
        idxs = list(indices) if indices is not None else list(range(len(bundle.lines)))
        save_lock = threading.Lock()

        def set_status(i: int, status: LineStatus) -> None:
            with save_lock:
                bundle.status[i] = status
                store.save_bundle(bundle)

        def work(i: int) -> None:
            try:
                generate_line_assets(
                    store,
                    bundle,
                    i,
                    runtime,
                    heights,
                    models,
                    on_stage=lambda s: registry.set_stage(job.job_id, i, s),
                    set_status=lambda st: set_status(i, st),
                )
            except ScenesmithError as e:
                registry.set_stage(job.job_id, i, "failed", error=str(e))
                set_status(i, LineStatus("failed", reason=f"{e.code}: {e}"))
            except Exception as e:  # keep one bad line from sinking the job
                registry.set_stage(job.job_id, i, "failed", error=str(e))
                set_status(i, LineStatus("failed", reason=f"internal: {e}"))
            else:
                registry.set_stage(job.job_id, i, "done")
                set_status(i, LineStatus("complete"))

        workers = max(1, runtime.settings.concurrency)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(work, idxs))
        registry.finish(job.job_id)
    except Exception as e:
        for i in job.line_indices:
            if job.stages.get(i) in (None, "pending"):
                registry.set_stage(job.job_id, i, "failed", error=str(e))
        registry.finish(job.job_id)
    finally:
        store.release(job.scene_id)


def start_generation(
    store: SceneStore,
    runtime: Runtime,
    registry: JobRegistry,
    scene_id: str,
    indices: list[int] | None = None,
) -> Job:
    """Acquire the scene, register a job, and run it on a daemon thread."""
    bundle = store.load_bundle(scene_id)
    idxs = list(indices) if indices is not None else list(range(len(bundle.lines)))
    store.acquire(scene_id)
    try:
        job = registry.create(scene_id, idxs)
        thread = threading.Thread(
            target=run_generation,
            args=(store, runtime, registry, job, idxs),
            daemon=True,
        )
        thread.start()
    except BaseException:
        store.release(scene_id)
        raise
    return job


# -- single-line edits --------------------------------------------------------


def _script_text_from_lines(bundle: SceneBundle) -> str:
    return "\n".join(f"{line.id}: {line.text}" for line in bundle.lines)


def apply_line_update(
    store: SceneStore,
    runtime: Runtime,
    registry: JobRegistry,
    scene_id: str,
    index: int,
    new_style: str | None = None,
    new_speech: str | None = None,
) -> tuple[Job, SceneBundle]:
    """Edit one line's style or spoken text, then regenerate its assets.

    A style edit re-voices the delivery through the annotation provider
    (id, text, and the shot plan stay pinned); a speech edit takes the
    given text verbatim.  Either way the line goes back to pending and a
    single-line job rebuilds audio, motion, and the retargeted clip.  The
    camera files are left alone: neither edit moves the shot plan.
    """
    if new_style is None and new_speech is None:
        raise ValueError("nothing to update: provide style or speech")
    if new_style is not None:
        check_style(new_style)
    if new_speech is not None and not new_speech.strip():
        raise EmptySpeech("speech text must be non-empty")

    bundle = store.load_bundle(scene_id)
    if not 0 <= index < len(bundle.lines):
        raise IndexOutOfRange(f"scene has {len(bundle.lines)} lines, no line {index}")

    store.acquire(scene_id)
    try:
        line = bundle.lines[index]
        if new_style is not None:
            line = regenerate_line(line, new_style, _script_text_from_lines(bundle), runtime.llm)
        if new_speech is not None:
            line = line.with_updates(speech=new_speech)
        bundle.lines[index] = line
        bundle.status[index] = LineStatus("pending")
        store.save_bundle(bundle)

        job = registry.create(scene_id, [index])
        thread = threading.Thread(
            target=run_generation,
            args=(store, runtime, registry, job, [index]),
            daemon=True,
        )
        thread.start()
    except BaseException:
        store.release(scene_id)
        raise
    return job, bundle
