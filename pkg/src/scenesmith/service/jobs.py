"""In-memory registry of generation jobs and their per-line progress."""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from ..errors import JobNotFound

LINE_STAGES = ("pending", "speech", "gesture", "retarget", "done", "failed")
JOB_STATES = ("running", "done", "partial", "failed")


@dataclass
class Job:
    job_id: str
    scene_id: str
    line_indices: list[int]
    state: str = "running"
    stages: dict[int, str] = field(default_factory=dict)
    errors: dict[int, str] = field(default_factory=dict)
    # transition log: (monotonic time, line index, stage just entered)
    events: list[tuple[float, int, str]] = field(default_factory=list)

    def __post_init__(self):
        for i in self.line_indices:
            self.stages.setdefault(i, "pending")

    def to_record(self) -> dict:
        lines = [{"index": i, "stage": self.stages[i]} for i in sorted(self.stages)]
        for row in lines:
            err = self.errors.get(row["index"])
            if err:
                row["error"] = err
        return {"jobId": self.job_id, "sceneId": self.scene_id, "state": self.state, "lines": lines}


class JobRegistry:
    def __init__(self):
        self._jobs: dict[str, Job] = {}
        self._lock = threading.Lock()

    def create(self, scene_id: str, line_indices: list[int]) -> Job:
        job = Job(job_id=uuid.uuid4().hex[:12], scene_id=scene_id, line_indices=list(line_indices))
        with self._lock:
            self._jobs[job.job_id] = job
        return job

    def get(self, job_id: str) -> Job:
        with self._lock:
            job = self._jobs.get(job_id)
        if job is None:
            raise JobNotFound(f"no job {job_id!r}")
        return job

    def set_stage(self, job_id: str, index: int, stage: str, error: str | None = None) -> None:
        assert stage in LINE_STAGES
        with self._lock:
            job = self._jobs[job_id]
            job.stages[index] = stage
            job.events.append((time.monotonic(), index, stage))
            if error is not None:
                job.errors[index] = error

    def finish(self, job_id: str) -> None:
        with self._lock:
            job = self._jobs[job_id]
            stages = set(job.stages.values())
            if stages <= {"done"}:
                job.state = "done"
            elif "done" in stages:
                job.state = "partial"
            else:
                job.state = "failed"
