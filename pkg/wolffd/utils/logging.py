"""
Logging setup

A single stderr sink so that stdout carries only command output.
"""

import sys

from loguru import logger

LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <7}</level> | {name}:{function} - {message}"


def configure_logging(level: str = "INFO") -> None:
    """Replace loguru's default handler with one stderr sink at `level`"""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format=LOG_FORMAT)
