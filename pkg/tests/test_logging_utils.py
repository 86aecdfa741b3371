"""
Tests for setup_logging.
"""

import logging

from zeta_region.utils.logging_utils import setup_logging


class TestSetupLogging:
    """Test suite for setup_logging."""

    def test_console_and_file_handlers(self, tmp_path):
        log_file = tmp_path / "run.log"

        logger = setup_logging(str(log_file), console_level=logging.WARNING)

        levels = sorted(handler.level for handler in logger.handlers)
        assert levels == [logging.DEBUG, logging.WARNING]
        logger.debug("kernel constants computed")
        for handler in logger.handlers:
            handler.flush()
        assert "kernel constants computed" in log_file.read_text()

    def test_repeated_setup_does_not_stack_handlers(self, tmp_path):
        setup_logging(str(tmp_path / "a.log"))

        logger = setup_logging(str(tmp_path / "b.log"))

        assert len(logger.handlers) == 2

    def test_without_file(self):
        logger = setup_logging(None)

        assert len(logger.handlers) == 1
        assert logger.name == "zeta_region"
