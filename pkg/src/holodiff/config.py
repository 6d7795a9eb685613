"""Environment-driven settings.

``HOLODIFF_THREADS`` caps the sweep worker pool and ``HOLODIFF_LOG_LEVEL`` sets
the default log level. Both may be placed in a ``.env`` file.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from holodiff.errors import ConfigError

logger = logging.getLogger(__name__)

THREADS_ENV = "HOLODIFF_THREADS"
LOG_LEVEL_ENV = "HOLODIFF_LOG_LEVEL"


@dataclass(frozen=True)
class Settings:
    """Runtime settings resolved from the environment."""

    threads: int
    log_level: str = "WARNING"


def _parse_threads(raw: str | None) -> int:
    if raw is None or not raw.strip():
        return os.cpu_count() or 1
    try:
        threads = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    if threads < 1:
        raise ConfigError(f"{THREADS_ENV} must be positive, got {threads}")
    return threads


def get_settings() -> Settings:
    """Read settings from the process environment (after loading ``.env``)."""
    load_dotenv()
    threads = _parse_threads(os.environ.get(THREADS_ENV))
    level = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"{LOG_LEVEL_ENV} is not a log level: {level!r}")
    logger.debug("settings: threads=%d log_level=%s", threads, level)
    return Settings(threads=threads, log_level=level)
