"""Command line entry points: generate a scene, serve the API, validate a bundle.

Exit codes for `generate`: 0 every line rendered, 2 some lines failed,
1 nothing usable (bad script, missing cast, unreadable input).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .config import Settings
from .errors import ScenesmithError
from .kinematics import parse_bvh
from .kinematics.characters import load_character
from .model import RawScript, parse_speaker_lines
from .motion.gestures import frame_count
from .camera import CameraPose
from .service import JobRegistry, SceneStore, build_runtime, create_scene, run_generation
from .service.pipeline import default_cast
from .speech import read_wav

_CAST_ARG_RE = re.compile(r"^(?P<speaker>[^=]+)=(?P<voice>[^:]+):(?P<model>.+)$")


def _slug(text: str) -> str:
    slug = re.sub(r"[^A-Za-z0-9_-]+", "-", text).strip("-").lower()
    return slug or "scene"


def _unique_scene_id(store: SceneStore, base: str) -> str:
    if not store.exists(base):
        return base
    n = 2
    while store.exists(f"{base}-{n}"):
        n += 1
    return f"{base}-{n}"


def _parse_cast_args(pairs: list[str]) -> dict:
    cast = {}
    for pair in pairs:
        m = _CAST_ARG_RE.match(pair)
        if not m:
            raise ValueError(f"--cast must look like speaker=voiceId:modelId, got {pair!r}")
        cast[m.group("speaker")] = {
            "voiceId": m.group("voice"),
            "modelId": m.group("model"),
        }
    return cast


def cmd_generate(args: argparse.Namespace) -> int:
    if args.script == "-":
        text = sys.stdin.read()
        source = "stdin"
    else:
        path = Path(args.script)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            print(f"cannot read script: {e}", file=sys.stderr)
            return 1
        source = path.stem

    settings = Settings.from_env()
    if args.out:
        settings.data_dir = Path(args.out)
    runtime = build_runtime(settings)
    store = SceneStore(settings.data_dir)
    registry = JobRegistry()

    try:
        script = RawScript(text, source_name=source)
        speakers = parse_speaker_lines(script).speakers
        cast_record = default_cast(speakers, runtime).to_record()
        cast_record.update(_parse_cast_args(args.cast))

        if args.scene_id:
            if store.exists(args.scene_id):
                print(f"scene {args.scene_id!r} already exists", file=sys.stderr)
                return 1
            scene_id = args.scene_id
        else:
            scene_id = _unique_scene_id(store, _slug(source))

        bundle, warnings = create_scene(
            store, text, runtime, cast_record, scene_id, source_name=source
        )
    except (ScenesmithError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)

    store.acquire(bundle.scene_id)
    job = registry.create(bundle.scene_id, list(range(len(bundle.lines))))
    run_generation(store, runtime, registry, job)  # releases the scene token

    bundle = store.load_bundle(bundle.scene_id)
    failed = [i for i, s in enumerate(bundle.status) if s.state == "failed"]
    for i in failed:
        print(f"line {i} failed: {bundle.status[i].reason}", file=sys.stderr)
    print(
        json.dumps(
            {
                "sceneId": bundle.scene_id,
                "outDir": str(store.scene_dir(bundle.scene_id)),
                "lines": len(bundle.lines),
                "failed": failed,
            }
        )
    )
    if failed and len(failed) == len(bundle.lines):
        return 1
    return 2 if failed else 0


def validate_scene_dir(scene_dir: Path) -> list[str]:
    """Structural checks over a generated bundle; returns problem strings."""
    from .model import decode_bundle
    from .speech.audio import SAMPLE_RATE

    problems: list[str] = []
    meta = scene_dir / "scene.json"
    if not meta.is_file():
        return [f"{scene_dir}: no scene.json"]
    try:
        bundle = decode_bundle(scene_dir.name, meta.read_text(encoding="utf-8"))
    except (ScenesmithError, ValueError, KeyError, json.JSONDecodeError) as e:
        return [f"scene.json unreadable: {e}"]

    for speaker, entry in bundle.cast.items():
        try:
            load_character(entry.model_id)
        except ScenesmithError as e:
            problems.append(f"cast[{speaker}]: {e}")

    for i, status in enumerate(bundle.status):
        if status.state != "complete":
            continue
        wav = scene_dir / "audio" / f"line-{i}.wav"
        anim = scene_dir / "anim" / f"line-{i}.bvh"
        motion = scene_dir / "motion" / f"line-{i}.bvh"
        cam = scene_dir / "camera" / f"line-{i}.json"
        n_samples = None
        for path in (wav, anim, motion, cam):
            if not path.is_file():
                problems.append(f"line {i}: missing {path.name}")
        try:
            if wav.is_file():
                n_samples = len(read_wav(wav).samples)
        except (ScenesmithError, ValueError) as e:
            problems.append(f"line {i}: bad audio: {e}")
        for path in (anim, motion):
            if not path.is_file():
                continue
            try:
                clip = parse_bvh(path.read_text(encoding="utf-8"))
            except ScenesmithError as e:
                problems.append(f"line {i}: bad {path.parent.name} clip: {e}")
                continue
            if n_samples is not None and clip.n_frames != frame_count(n_samples, SAMPLE_RATE):
                problems.append(
                    f"line {i}: {path.parent.name} clip is {clip.n_frames} frames, "
                    f"audio implies {frame_count(n_samples, SAMPLE_RATE)}"
                )
        if cam.is_file():
            try:
                CameraPose.from_record(json.loads(cam.read_text(encoding="utf-8")))
            except (ScenesmithError, ValueError, KeyError, json.JSONDecodeError) as e:
                problems.append(f"line {i}: bad camera pose: {e}")
    return problems


def cmd_validate(args: argparse.Namespace) -> int:
    scene_dir = Path(args.scene_dir)
    problems = validate_scene_dir(scene_dir)
    for p in problems:
        print(p, file=sys.stderr)
    print(json.dumps({"scene": scene_dir.name, "problems": len(problems)}))
    return 1 if problems else 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    settings = Settings.from_env()
    if args.port is not None:
        settings.port = args.port
    if args.data_dir:
        settings.data_dir = Path(args.data_dir)
    uvicorn.run(create_app(settings), host=args.host, port=settings.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scenesmith")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="render a script file into a scene bundle")
    gen.add_argument("script", help="script file path, or - for stdin")
    gen.add_argument("--out", help="scene data directory (default: S2S_DATA_DIR)")
    gen.add_argument("--scene-id", help="exact scene id to create")
    gen.add_argument(
        "--cast",
        action="append",
        default=[],
        metavar="SPEAKER=VOICE:MODEL",
        help="cast one speaker (repeatable); unlisted speakers are cast round-robin",
    )
    gen.set_defaults(func=cmd_generate)

    val = sub.add_parser("validate", help="check a generated scene bundle for defects")
    val.add_argument("scene_dir", help="path to one scene directory")
    val.set_defaults(func=cmd_validate)

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=None, help="default: S2S_PORT")
    srv.add_argument("--data-dir", help="scene data directory (default: S2S_DATA_DIR)")
    srv.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
