"""Environment-driven settings."""

from __future__ import annotations

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass

from svineq.errors import ConfigError

THREADS_ENV = "SVINEQ_THREADS"
LOG_LEVEL_ENV = "SVINEQ_LOG_LEVEL"


@dataclass(frozen=True)
class Settings:
    """Process-wide knobs read from the environment.

    Attributes:
        threads: Cap on worker threads for search and oracle restarts; None
            means run serially. Never changes results, only wall time.
        log_level: Logging level name for the CLI, if set.
    """

    threads: int | None = None
    log_level: str | None = None

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> Settings:
        """Read SVINEQ_THREADS and SVINEQ_LOG_LEVEL.

        Raises:
            ConfigError: If a variable is set to an invalid value.
        """
        env = os.environ if environ is None else environ
        threads: int | None = None
        raw_threads = env.get(THREADS_ENV, "").strip()
        if raw_threads:
            try:
                threads = int(raw_threads)
            except ValueError:
                raise ConfigError(
                    f"{THREADS_ENV} must be a positive integer, got {raw_threads!r}"
                ) from None
            if threads < 1:
                raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {threads}")

        log_level = env.get(LOG_LEVEL_ENV, "").strip().upper() or None
        if log_level is not None and not isinstance(logging.getLevelName(log_level), int):
            raise ConfigError(f"{LOG_LEVEL_ENV} is not a logging level: {log_level!r}")
        return cls(threads=threads, log_level=log_level)
