import pytest
from hypothesis import HealthCheck, settings

from tyv.rootdata import build_chevalley

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

ACCEPTANCE_TYPES = ("A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2")


@pytest.fixture(scope="session")
def chevalley():
    built = {}

    def get(t):
        if t not in built:
            built[t] = build_chevalley(t)
        return built[t]

    return get


@pytest.fixture(autouse=True)
def _private_cache(tmp_path_factory, monkeypatch):
    # keep the structure-constant cache out of the user's home
    monkeypatch.setenv("TYV_CACHE_DIR", str(tmp_path_factory.getbasetemp() / "cache"))
