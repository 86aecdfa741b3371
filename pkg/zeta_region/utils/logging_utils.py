"""
Logging configuration for the zero-free region engine.
"""

import logging
import sys

from .. import config


def setup_logging(log_file=config.LOG_FILE, console_level=logging.INFO, file_level=logging.DEBUG):
    """
    Configure application logging with both file and console handlers.

    Calling it again replaces the handlers instead of stacking new ones.

    Args:
        log_file (str): Path to the log file; None disables the file handler
        console_level (int): Logging level for console output
        file_level (int): Logging level for file output

    Returns:
        logging.Logger: Configured logger instance
    """
    # Create logger
    logger = logging.getLogger("zeta_region")
    logger.setLevel(logging.DEBUG)

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(file_level)
        file_handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
        logger.addHandler(file_handler)

    return logger
