import sys

import numpy as np
import pytest

from scenesmith.config import Settings
from scenesmith.service import JobRegistry, SceneStore, build_runtime


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("tests.test_acceptance") or sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for line in verdicts:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session", autouse=True)
def _numpy_lane():
    # module tests run on the numpy lane; cross-lane parity and jit-path
    # behavior are exercised explicitly in test_kernels / test_acceptance
    from scenesmith import kernels

    kernels.force_lane("numpy")
    yield
    kernels.force_lane(None)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def offline_settings(tmp_path):
    return Settings(data_dir=tmp_path / "scenes", kernels="numpy", concurrency=2)


@pytest.fixture
def offline_runtime(offline_settings):
    return build_runtime(offline_settings)


@pytest.fixture
def store(offline_settings):
    return SceneStore(offline_settings.data_dir)


@pytest.fixture
def registry():
    return JobRegistry()


TWO_SPEAKER_SCRIPT = (
    "Ada: Did you run the experiment overnight?\n"
    "Grace: I did, and the results look wonderful!\n"
    "Ada: Show me everything.\n"
)


@pytest.fixture
def two_speaker_script():
    return TWO_SPEAKER_SCRIPT
