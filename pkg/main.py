"""
ConSHN-BT reasoning toolkit
Main command-line entry point
"""
import logging
import sys

from cli.commands import run
from config import settings
from utils.logging_utils import setup_logging

# Setup logging
setup_logging(settings.LOG_LEVEL, settings.LOG_FILE)
logger = logging.getLogger(__name__)


def main() -> int:
    logger.debug(f"Starting with arguments {sys.argv[1:]}")
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
