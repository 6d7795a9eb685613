import pytest
from langgraph.pregel import Pregel

from holodiff.config import LOG_LEVEL_ENV, THREADS_ENV, get_settings
from holodiff.errors import ConfigError
from holodiff.graph import graph


def test_graph_is_compiled() -> None:
    assert isinstance(graph, Pregel)
    assert graph.name == "holodiff"


def test_threads_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(THREADS_ENV, "4")
    monkeypatch.setenv(LOG_LEVEL_ENV, "debug")
    settings = get_settings()
    assert settings.threads == 4
    assert settings.log_level == "DEBUG"


def test_threads_default_to_cpu_count(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(THREADS_ENV, "")
    assert get_settings().threads >= 1


@pytest.mark.parametrize("value", ["0", "-2", "many"])
def test_bad_thread_count(monkeypatch: pytest.MonkeyPatch, value: str) -> None:
    monkeypatch.setenv(THREADS_ENV, value)
    with pytest.raises(ConfigError):
        get_settings()


def test_bad_log_level(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(THREADS_ENV, "1")
    monkeypatch.setenv(LOG_LEVEL_ENV, "chatty")
    with pytest.raises(ConfigError):
        get_settings()
