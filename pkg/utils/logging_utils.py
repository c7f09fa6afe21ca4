"""Logging utilities for the toolkit."""
import logging
import sys
import os
from pathlib import Path
from typing import Optional, Union

FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(log_level: Union[int, str] = logging.WARNING,
                  log_file: Optional[str] = None) -> logging.Logger:
    """Configure logging for the toolkit.

    Console output goes to stderr; stdout is reserved for command results.
    """
    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())

    # Create logs directory if using file logging
    if log_file:
        log_dir = Path(os.path.dirname(log_file) or ".")
        log_dir.mkdir(parents=True, exist_ok=True)

    # Configure root logger
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Drop handlers from an earlier call
    for handler in list(root_logger.handlers):
        if getattr(handler, "_conshn", False):
            root_logger.removeHandler(handler)

    formatter = logging.Formatter(FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    console_handler._conshn = True
    root_logger.addHandler(console_handler)

    # Add file handler if specified
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        file_handler._conshn = True
        root_logger.addHandler(file_handler)

    return root_logger
