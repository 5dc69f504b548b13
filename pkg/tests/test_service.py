import json
import time

import numpy as np
import pytest
from fastapi.testclient import TestClient

from scenesmith.errors import (
    CastIncomplete,
    ProviderUnavailable,
    SceneBusy,
    SceneNotFound,
)
from scenesmith.model import CastAssignment, CastEntry, LineStatus, SceneBundle, SceneSummary, validate_line
from scenesmith.service import (
    JobRegistry,
    SceneStore,
    create_app,
    create_scene,
    plan_camera,
    run_generation,
    start_generation,
)

LINE = {
    "id": "Ada",
    "text": "Hello.",
    "speech": "Hello!",
    "style": "Happy",
    "emotionAnalysis": "x",
    "shotType": "Medium shot",
    "shotAngle": "Eye level",
    "shotAnalysis": "y",
}


def make_bundle(scene_id="s1", speakers=("Ada",)) -> SceneBundle:
    lines = [
        validate_line(dict(LINE, id=s, text=f"Line {i}.", speech=f"Line {i}!"), index=i)
        for i, s in enumerate(speakers)
    ]
    cast = CastAssignment({s: CastEntry("stub-f1", "capsule-adult") for s in set(speakers)})
    return SceneBundle(scene_id, SceneSummary("T", "S"), lines, cast)


class TestStore:
    def test_save_load_round_trip(self, store):
        bundle = make_bundle()
        store.save_bundle(bundle)
        again = store.load_bundle("s1")
        assert again.scene_id == "s1"
        assert [l.to_record() for l in again.lines] == [l.to_record() for l in bundle.lines]

    def test_missing_scene(self, store):
        with pytest.raises(SceneNotFound):
            store.load_bundle("ghost")

    def test_path_traversal_rejected(self, store):
        with pytest.raises(SceneNotFound):
            store.load_bundle("../etc")
        with pytest.raises(SceneNotFound):
            store.scene_dir(".hidden")

    def test_listing_newest_first(self, store):
        store.save_bundle(make_bundle("older"))
        time.sleep(0.02)
        store.save_bundle(make_bundle("newer"))
        rows = store.list_scenes()
        assert [r["sceneId"] for r in rows] == ["newer", "older"]
        assert set(rows[0]) == {"sceneId", "title", "createdAt"}

    def test_busy_token_is_exclusive(self, store):
        store.save_bundle(make_bundle())
        store.acquire("s1")
        with pytest.raises(SceneBusy):
            store.acquire("s1")
        store.release("s1")
        store.acquire("s1")
        store.release("s1")


class TestJobs:
    def test_lifecycle(self, registry):
        job = registry.create("s1", [0, 1])
        assert job.state == "running"
        registry.set_stage(job.job_id, 0, "done")
        registry.set_stage(job.job_id, 1, "failed", error="boom")
        registry.finish(job.job_id)
        rec = registry.get(job.job_id).to_record()
        assert rec["state"] == "partial"
        assert rec["lines"] == [
            {"index": 0, "stage": "done"},
            {"index": 1, "stage": "failed", "error": "boom"},
        ]

    def test_all_failed_is_failed(self, registry):
        job = registry.create("s1", [0])
        registry.set_stage(job.job_id, 0, "failed")
        registry.finish(job.job_id)
        assert registry.get(job.job_id).state == "failed"

    def test_events_are_timestamped_in_order(self, registry):
        job = registry.create("s1", [0])
        for stage in ("speech", "gesture", "retarget", "done"):
            registry.set_stage(job.job_id, 0, stage)
        times = [t for t, _, _ in job.events]
        assert times == sorted(times)
        assert [s for _, _, s in job.events] == ["speech", "gesture", "retarget", "done"]


class TestCreateScene:
    def test_offline_create(self, store, offline_runtime, two_speaker_script):
        bundle, warnings = create_scene(store, two_speaker_script, offline_runtime)
        assert [l.id for l in bundle.lines] == ["Ada", "Grace", "Ada"]
        assert set(bundle.cast) == {"Ada", "Grace"}
        assert all(s.state == "pending" for s in bundle.status)
        assert store.exists(bundle.scene_id)

    def test_explicit_cast_must_cover_speakers(self, store, offline_runtime, two_speaker_script):
        with pytest.raises(CastIncomplete):
            create_scene(
                store,
                two_speaker_script,
                offline_runtime,
                {"Ada": {"voiceId": "v", "modelId": "capsule-adult"}},
            )


class TestPlanCamera:
    def test_solo_speaker_frames_single_subject(self, store, offline_runtime):
        bundle, _ = create_scene(store, "Solo: All alone here.", offline_runtime)
        pose = plan_camera(bundle, 0, {"Solo": 1.70})
        assert np.allclose(pose.look_at[[0, 2]], 0.0)

    def test_pair_takes_most_recent_other_speaker(self, store, offline_runtime):
        text = "A: one.\nB: two.\nC: three.\nB: four."
        bundle, _ = create_scene(store, text, offline_runtime)
        heights = {"A": 1.7, "B": 1.7, "C": 1.7}
        # line 3 speaker B: most recent other speaker is C, both already seen
        pose = plan_camera(bundle, 3, heights)
        assert pose is not None
        # line 0 speaker A: nobody earlier, so the next other speaker (B) pairs
        pose0 = plan_camera(bundle, 0, heights)
        assert not np.allclose(pose0.look_at[[0, 2]], 0.0)

    def test_earlier_speaker_stands_left(self, store, offline_runtime, two_speaker_script):
        bundle, _ = create_scene(store, two_speaker_script, offline_runtime)
        heights = {"Ada": 1.78, "Grace": 1.20}
        assert plan_camera(bundle, 0, heights).look_at[0] == pytest.approx(-0.6)
        assert plan_camera(bundle, 1, heights).look_at[0] == pytest.approx(0.6)


class FailingTTS:
    """Fails for one marked line, delegates the rest."""

    def __init__(self, inner, needle):
        self.inner, self.needle = inner, needle

    def list_voices(self):
        return self.inner.list_voices()

    def synthesize(self, text, voice_id, style):
        if self.needle in text:
            raise ProviderUnavailable("injected failure")
        return self.inner.synthesize(text, voice_id, style)


class TestRunGeneration:
    def test_partial_failure_isolated(self, store, offline_runtime, registry, two_speaker_script):
        bundle, _ = create_scene(store, two_speaker_script, offline_runtime)
        offline_runtime.tts = FailingTTS(offline_runtime.tts, "wonderful")
        job = start_generation(store, offline_runtime, registry, bundle.scene_id)
        deadline = time.time() + 30
        while registry.get(job.job_id).state == "running" and time.time() < deadline:
            time.sleep(0.02)
        assert registry.get(job.job_id).state == "partial"
        after = store.load_bundle(bundle.scene_id)
        assert [s.state for s in after.status] == ["complete", "failed", "complete"]
        assert "provider_unavailable" in after.status[1].reason
        assert store.audio_path(bundle.scene_id, 0).is_file()
        assert not store.audio_path(bundle.scene_id, 1).is_file()

    def test_token_released_after_run(self, store, offline_runtime, registry):
        bundle, _ = create_scene(store, "A: short line.", offline_runtime)
        store.acquire(bundle.scene_id)
        job = registry.create(bundle.scene_id, [0])
        run_generation(store, offline_runtime, registry, job)
        store.acquire(bundle.scene_id)  # would raise if the token leaked
        store.release(bundle.scene_id)


@pytest.fixture
def client(offline_settings):
    app = create_app(offline_settings)
    return TestClient(app)


class TestApi:
    def _make_scene(self, client, script="Ada: Hi there.\nGrace: Hello back!"):
        r = client.post("/api/scenes", json={"script": script})
        assert r.status_code == 201
        return r.json()["sceneId"]

    def _wait(self, client, job_id, timeout=30.0):
        deadline = time.time() + timeout
        while time.time() < deadline:
            rec = client.get(f"/api/jobs/{job_id}").json()
            if rec["state"] != "running":
                return rec
            time.sleep(0.02)
        raise AssertionError("job never settled")

    def test_create_response_shape(self, client):
        r = client.post("/api/scenes", json={"script": "Ada: Hi there."})
        body = r.json()
        assert set(body) == {"sceneId", "title", "synopsis", "speakers", "warnings"}
        assert body["speakers"] == ["Ada"]

    def test_script_required(self, client):
        r = client.post("/api/scenes", json={})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "bad_request"

    def test_prose_only_script_rejected(self, client):
        r = client.post("/api/scenes", json={"script": "no dialogue at all"})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "no_dialogue_found"

    def test_full_generate_and_assets(self, client):
        sid = self._make_scene(client)
        job = client.post(f"/api/scenes/{sid}/generate")
        assert job.status_code == 202
        state = self._wait(client, job.json()["jobId"])
        assert state["state"] == "done"
        scene = client.get(f"/api/scenes/{sid}").json()
        assert [s["state"] for s in scene["status"]] == ["complete", "complete"]
        for kind in ("audio", "motion", "camera"):
            assert client.get(f"/api/scenes/{sid}/lines/0/{kind}").status_code == 200

    def test_busy_scene_conflicts(self, client):
        sid = self._make_scene(client)
        store: SceneStore = client.app.state.store
        store.acquire(sid)
        try:
            assert client.post(f"/api/scenes/{sid}/generate").status_code == 409
            r = client.patch(f"/api/scenes/{sid}/lines/0", json={"style": "Sad"})
            assert r.status_code == 409
            assert r.json()["error"]["code"] == "scene_busy"
        finally:
            store.release(sid)

    def test_patch_speech_verbatim(self, client):
        sid = self._make_scene(client)
        r = client.patch(f"/api/scenes/{sid}/lines/1", json={"speech": "Word for word."})
        assert r.status_code == 202
        assert r.json()["line"]["speech"] == "Word for word."
        self._wait(client, r.json()["jobId"])
        scene = client.get(f"/api/scenes/{sid}").json()
        assert scene["lines"][1]["speech"] == "Word for word."
        assert scene["status"][1] == {"state": "complete"}

    def test_patch_needs_some_field(self, client):
        sid = self._make_scene(client)
        assert client.patch(f"/api/scenes/{sid}/lines/0", json={}).status_code == 400

    def test_asset_before_generation_404(self, client):
        sid = self._make_scene(client)
        r = client.get(f"/api/scenes/{sid}/lines/0/audio")
        assert r.status_code == 404
        assert r.json()["error"]["code"] == "asset_not_found"

    def test_scene_id_collision_409(self, client):
        client.post("/api/scenes", json={"script": "A: hi.", "sceneId": "fixed"})
        r = client.post("/api/scenes", json={"script": "A: hi.", "sceneId": "fixed"})
        assert r.status_code == 409

    def test_unknown_model_in_cast_404(self, client):
        r = client.post(
            "/api/scenes",
            json={
                "script": "A: hi.",
                "cast": {"A": {"voiceId": "v", "modelId": "no-such-model"}},
            },
        )
        assert r.status_code == 404
        assert r.json()["error"]["code"] == "unknown_character"

    def test_catalogues(self, client):
        voices = client.get("/api/voices").json()["voices"]
        assert {v["provider"] for v in voices} == {"offline"}
        chars = client.get("/api/characters").json()["characters"]
        assert [c["characterId"] for c in chars] == ["capsule-adult", "capsule-kid"]

    def test_malformed_json_body(self, client):
        r = client.post("/api/scenes", content=b"{not json")
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "bad_request"
