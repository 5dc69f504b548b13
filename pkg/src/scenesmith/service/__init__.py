from .app import create_app
from .jobs import Job, JobRegistry
from .pipeline import (
    Runtime,
    apply_line_update,
    build_runtime,
    create_scene,
    generate_line_assets,
    plan_camera,
    run_generation,
    start_generation,
)
from .store import SceneStore, new_scene_id

__all__ = [
    "create_app",
    "Job",
    "JobRegistry",
    "Runtime",
    "apply_line_update",
    "build_runtime",
    "create_scene",
    "generate_line_assets",
    "plan_camera",
    "run_generation",
    "start_generation",
    "SceneStore",
    "new_scene_id",
]
