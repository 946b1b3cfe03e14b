import json

from hollab.run_logger import RunLogger


def _events(log_dir):
    (log_file,) = log_dir.glob("hollab_*.log")
    events = []
    for line in log_file.read_text().splitlines():
        _, level, payload = line.split(" | ", 2)
        events.append((level, json.loads(payload)))
    return events


def test_directory_is_created_on_first_event(tmp_path):
    log_dir = tmp_path / "runs"
    logger = RunLogger(str(log_dir))
    assert not log_dir.exists()
    logger.log_computation("homology", {"p": 3, "r": 1}, {"rows": 4})
    (level, event), = _events(log_dir)
    assert level == "INFO"
    assert event["type"] == "computation"
    assert event["data"]["inputs"] == {"p": 3, "r": 1}


def test_failed_suite_runs_are_warnings(tmp_path):
    logger = RunLogger(str(tmp_path))
    logger.log_suite_run("bockstein", 1, passed=2, failed=0, elapsed_ms=5)
    logger.log_suite_run("bockstein", 1, passed=1, failed=1, elapsed_ms=5)
    levels = [level for level, _ in _events(tmp_path)]
    assert levels == ["INFO", "WARNING"]


def test_validation_errors_are_truncated(tmp_path):
    logger = RunLogger(str(tmp_path))
    logger.log_validation_error("homology", [f"error {i}" for i in range(30)])
    (_, event), = _events(tmp_path)
    assert event["data"]["error_count"] == 30
    assert len(event["data"]["errors"]) == 20


def test_errors_and_exports(tmp_path):
    logger = RunLogger(str(tmp_path))
    logger.log_error("UnsupportedCase", "no closed formula for p=2, r=2")
    logger.log_export("xlsx", 3, 2048)
    (error_level, error), (_, export) = _events(tmp_path)
    assert error_level == "ERROR"
    assert error["data"]["context"] == {}
    assert export["data"]["size_kb"] == 2.0


def test_reconfigure_moves_the_log(tmp_path):
    logger = RunLogger(str(tmp_path / "a"))
    logger.log_user_action("verify")
    logger.reconfigure(str(tmp_path / "b"))
    logger.log_user_action("verify", {"suite": "bockstein"})
    assert len(_events(tmp_path / "a")) == 1
    (_, event), = _events(tmp_path / "b")
    assert event["data"]["parameters"] == {"suite": "bockstein"}
