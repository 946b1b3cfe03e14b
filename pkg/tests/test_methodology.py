import pytest

from hollab.methodology import CLAIMS, COMPUTATION_METHODS, claims_for_suite, get_anchor
from hollab.reference_data import (
    DEFAULT_SEED,
    SUITE_NAMES,
    SUITE_SEEDS,
    Provenance,
    get_log_dir,
    get_suite_seed,
    get_thread_cap,
)


def test_claims_are_keyed_by_id():
    assert all(cid == claim.id for cid, claim in CLAIMS.items())
    assert {claim.suite for claim in CLAIMS.values()} == set(SUITE_NAMES)
    assert all(isinstance(claim.provenance, Provenance) for claim in CLAIMS.values())


def test_claims_for_suite():
    assert [c.id for c in claims_for_suite("bockstein")] == ["BK-01", "BK-02"]
    with pytest.raises(KeyError):
        claims_for_suite("topology")


def test_anchors():
    assert get_anchor("NT-06") == "Wilson's theorem"
    assert all(claim.anchor for claim in CLAIMS.values())


def test_methods_name_their_inputs():
    assert all(method.inputs for method in COMPUTATION_METHODS.values())


def test_suite_seeds_are_fixed_and_distinct():
    assert SUITE_SEEDS["holomorph-basics"] == DEFAULT_SEED
    assert len(set(SUITE_SEEDS.values())) == len(SUITE_NAMES)
    assert get_suite_seed("unknown") == DEFAULT_SEED


@pytest.mark.parametrize("raw,expected", [("3", 3), ("0", 1), ("-2", 1)])
def test_thread_cap(monkeypatch, raw, expected):
    monkeypatch.setenv("HOLLAB_THREADS", raw)
    assert get_thread_cap() == expected


def test_thread_cap_ignores_garbage(monkeypatch):
    monkeypatch.setenv("HOLLAB_THREADS", "many")
    assert get_thread_cap() >= 1


def test_log_dir_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("HOLLAB_LOG_DIR", str(tmp_path))
    assert get_log_dir() == str(tmp_path)
