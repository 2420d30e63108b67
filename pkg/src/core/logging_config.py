"""
Structured logging configuration for the counting CLI
"""
import logging
import sys

from pythonjsonlogger import jsonlogger

from .correlation import CorrelationIdFilter


def setup_logging(level: str = "WARNING") -> logging.Logger:
    """
    Configure structured JSON logging

    Features:
    - JSON-formatted logs for easy parsing
    - Includes timestamp, level, message, correlation_id
    - Outputs to stderr so command output on stdout stays byte-identical
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)

    formatter = jsonlogger.JsonFormatter(
        "%(asctime)s %(name)s %(levelname)s %(message)s %(correlation_id)s",
        datefmt="%Y-%m-%dT%H:%M:%S",
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Remove existing handlers
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    handler.addFilter(CorrelationIdFilter())
    root_logger.addHandler(handler)

    return root_logger
