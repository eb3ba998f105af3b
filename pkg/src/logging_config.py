"""
Structured logging configuration using structlog.

Logs are JSON lines written to stderr (and optionally a file), so that
reports printed on stdout stay machine readable. Every line logged while a
CLI command runs carries that command's context (see bind_command_context).
"""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import structlog


def setup_logging(log_level: str = "WARNING", log_file: Optional[str] = None):
    """
    Configure structured logging.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path for logs (default: None, logs to stderr only)

    Example:
        >>> setup_logging(log_level="INFO")
        >>> bind_command_context("decompose", path="data/corpus/tree.scx")
        >>> structlog.get_logger().info("decomposition_completed", m=5, summands=3)
    """
    numeric_level = getattr(logging, log_level.upper(), logging.WARNING)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.processors.JSONRenderer(),
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    for handler in handlers:
        handler.setLevel(numeric_level)

    logging.basicConfig(
        format="%(message)s",  # structlog handles formatting
        level=numeric_level,
        handlers=handlers,
        force=True,
    )

    structlog.get_logger().info(
        "logging_configured",
        log_level=log_level,
        log_file=log_file if log_file else "stderr_only",
    )


def bind_command_context(command: str, **values: Any) -> Dict[str, Any]:
    """
    Replace the per-run log context with command=<command> plus values.

    None values are dropped. Returns the context now in effect.
    """
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(
        command=command, **{key: value for key, value in values.items() if value is not None}
    )
    return structlog.contextvars.get_contextvars()
