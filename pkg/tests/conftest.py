import os
import random
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from hollab.run_logger import run_log  # noqa: E402


@pytest.fixture(autouse=True)
def isolated_run_log(tmp_path, monkeypatch):
    """Every test writes its event log under its own temporary directory."""
    monkeypatch.setenv("HOLLAB_LOG_DIR", str(tmp_path / "logs"))
    run_log.reconfigure(str(tmp_path / "logs"))
    yield
    run_log.reconfigure(str(tmp_path / "logs"))


@pytest.fixture
def rng():
    return random.Random(1234)
