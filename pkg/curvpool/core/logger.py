"""
Logging configuration for curvpool.

This module provides structured logging with proper formatting and handlers.
Everything goes to stderr; stdout carries the machine-readable run output.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

import structlog

from .config import get_config


def setup_logging(
    log_level: Optional[str] = None,
    log_file: Optional[Path] = None,
    log_format: Optional[str] = None,
    enable_json: Optional[bool] = None,
) -> None:
    """Setup structured logging for curvpool."""

    config = get_config()

    # Use provided values or fall back to config
    level = log_level or config.log_level
    file_path = log_file or config.log_file
    format_str = log_format or config.log_format
    json_output = config.log_json if enable_json is None else enable_json

    processors = [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
    ]

    if json_output:
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format=format_str,
        handlers=_get_handlers(file_path),
        force=True,
    )


def _get_handlers(log_file: Optional[Path] = None) -> list:
    """Get logging handlers."""
    handlers: list = [logging.StreamHandler(sys.stderr)]

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    return handlers


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a structured logger instance."""
    return structlog.get_logger(name)


class StageLogger:
    """Logger with the pipeline's recurring events."""

    def __init__(self, name: str):
        self.logger = get_logger(name)

    def stage(self, dataset: str, stage: str, seconds: float, **kwargs) -> None:
        """Log a timed pipeline stage."""
        self.logger.info("stage finished", dataset=dataset, stage=stage, seconds=seconds, **kwargs)

    def graph_loaded(self, source: str, nodes: int, edges: int) -> None:
        self.logger.debug("graph loaded", source=source, nodes=nodes, edges=edges)

    def pooled(self, source: str, nodes_before: int, nodes_after: int, pools: int) -> None:
        self.logger.info(
            "graph pooled",
            source=source,
            nodes_before=nodes_before,
            nodes_after=nodes_after,
            pools=pools,
        )

    def output_written(self, path: Path, kind: str) -> None:
        self.logger.debug("output written", path=str(path), kind=kind)
