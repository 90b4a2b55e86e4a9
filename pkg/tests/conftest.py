import pytest

from topzeta.engine import EULER_CACHE_ENV, RunConfig


@pytest.fixture(autouse=True)
def _no_shared_euler_cache(monkeypatch):
    monkeypatch.delenv(EULER_CACHE_ENV, raising=False)


@pytest.fixture
def run_config() -> RunConfig:
    return RunConfig(jobs=1, euler_cache=None)
