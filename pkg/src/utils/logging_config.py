"""
Weylham - Logging Configuration
Purpose: Process-wide logging setup and per-stage run metadata
Version: 1.0.0
Date: 2026-10-19
"""

import logging
from datetime import datetime, timezone
from typing import Any, Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(level: str = "INFO", stream: Optional[Any] = None) -> None:
    """
    Configure application logging.

    Logs go to stderr by default so that stdout stays free for command
    results (words, DOT/JSON exports, tables).

    Args:
        level: Level name such as "DEBUG" or "WARNING"
        stream: Optional stream override, used by tests
    """
    numeric = getattr(logging, level.upper(), None)
    if not isinstance(numeric, int):
        raise ValueError(f"unknown log level: {level}")
    logging.basicConfig(
        level=numeric,
        format=LOG_FORMAT,
        datefmt=DATE_FORMAT,
        stream=stream,
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance."""
    return logging.getLogger(name)


def get_run_metadata(stage: str, **kwargs: Any) -> dict[str, Any]:
    """Metadata attached to each pipeline stage record."""
    return {
        "stage": stage,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        **kwargs,
    }


__all__ = ["LOG_FORMAT", "DATE_FORMAT", "setup_logging", "get_logger", "get_run_metadata"]
