"""Record test fixtures by driving the real service in-process.

Run from the repository root with the Python package installed:

    python3 frontend/scripts/record-fixtures.py

Writes JSON/BVH fixtures into frontend/tests/fixtures/. The UI tests replay
these instead of talking to a live server, so they stay hermetic while the
payload shapes are genuine service output.
"""

import json
import sys
import tempfile
import time
from pathlib import Path

from fastapi.testclient import TestClient

from scenesmith.config import Settings
from scenesmith.kinematics import fk_all_frames, parse_bvh
from scenesmith.service import create_app
from scenesmith.service.pipeline import build_runtime

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

SCRIPT = "\n".join(
    [
        "Nora: Morning, did the overnight render finish?",
        "Felix: It finished, and honestly it looks impressive.",
        # 26 words: a deliberately long line so playback tests cover > 10 s
        "Nora: Walk me through every single shot from the top, because I want "
        "to understand exactly where the timing slips and where the cut is "
        "hiding the seam.",
        "Iris: The seam is between the second and third shot.",
        "Felix: Then we fix the handoff first, agreed?",
        "Nora: Agreed, let's start there.",
    ]
)


class SlowTTS:
    """Delay synthesis so the job is observably running when first polled."""

    def __init__(self, inner):
        self.inner = inner

    def list_voices(self):
        return self.inner.list_voices()

    def synthesize(self, text, voice_id, style):
        time.sleep(0.15)
        return self.inner.synthesize(text, voice_id, style)


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        settings = Settings(data_dir=Path(tmp), kernels="numpy", concurrency=2)
        runtime = build_runtime(settings)
        runtime.tts = SlowTTS(runtime.tts)
        client = TestClient(create_app(settings, runtime=runtime))

        def save(name: str, payload) -> None:
            path = OUT / name
            if isinstance(payload, (bytes, bytearray)):
                path.write_bytes(payload)
            elif isinstance(payload, str):
                path.write_text(payload)
            else:
                path.write_text(json.dumps(payload, indent=2) + "\n")
            print(f"wrote {path.relative_to(OUT.parent.parent)}")

        r = client.post("/api/scenes", json={"script": SCRIPT, "sceneId": "fixture-scene"})
        assert r.status_code == 201, r.text
        scene_id = r.json()["sceneId"]
        save("create-response.json", r.json())

        r = client.post(f"/api/scenes/{scene_id}/generate")
        assert r.status_code == 202, r.text
        job_id = r.json()["jobId"]

        first = client.get(f"/api/jobs/{job_id}").json()
        save("job-running.json", first)
        while True:
            job = client.get(f"/api/jobs/{job_id}").json()
            if job["state"] != "running":
                break
            time.sleep(0.05)
        assert job["state"] == "done", job
        save("job-done.json", job)

        save("scene.json", client.get(f"/api/scenes/{scene_id}").json())
        save("scenes-list.json", client.get("/api/scenes").json())
        save("voices.json", client.get("/api/voices").json())
        save("characters.json", client.get("/api/characters").json())
        for i in range(6):
            save(f"camera-line-{i}.json", client.get(f"/api/scenes/{scene_id}/lines/{i}/camera").text)
        anim = client.get(f"/api/scenes/{scene_id}/lines/0/motion").text
        save("anim-line-0.bvh", anim)
        long_meta = parse_bvh(client.get(f"/api/scenes/{scene_id}/lines/2/motion").text)
        save(
            "line-2-motion-meta.json",
            {"frameCount": long_meta.rotations.shape[0], "frameTime": long_meta.frame_time},
        )

        r = client.patch(
            f"/api/scenes/{scene_id}/lines/5", json={"speech": "Agreed. Let's begin."}
        )
        assert r.status_code == 202, r.text
        save("patch-response.json", r.json())

        r = client.get("/api/scenes/missing-scene")
        assert r.status_code == 404
        save("error-404.json", r.json())

        # forward-kinematics oracle for the TypeScript implementation
        clip = parse_bvh(anim)
        world = fk_all_frames(clip)
        frames = sorted({0, 1, world.shape[0] // 2, world.shape[0] - 1})
        save(
            "fk-expected.json",
            {
                "file": "anim-line-0.bvh",
                "joints": [j.name for j in clip.skeleton.joints],
                "frameTime": clip.frame_time,
                "frames": frames,
                "positions": [[[float(v) for v in p] for p in world[f]] for f in frames],
            },
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
