"""Environment-driven process defaults"""

import logging
import os


def _safe_positive_int(value: str, fallback: int) -> int:
    try:
        parsed = int(value)
        return parsed if parsed > 0 else fallback
    except ValueError:
        return fallback


def default_jobs() -> int:
    """Worker count used when --jobs is not given"""
    return _safe_positive_int(os.getenv("MHNTF_JOBS", "1"), 1)


def record_timings() -> bool:
    """When false, reports carry 0.0 wall times so reruns are byte-identical"""
    return os.getenv("MHNTF_RECORD_TIMINGS", "true").strip().lower() != "false"


def log_level() -> int:
    name = os.getenv("MHNTF_LOG_LEVEL", "INFO").strip().upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.INFO
