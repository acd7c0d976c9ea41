"""
Centralized Logging Configuration
=================================

This module provides a centralized logging configuration for the crisis-summ toolkit.
It sets up logging with appropriate handlers, formatters, and levels.

Console output goes to stderr so that commands writing JSON to stdout stay machine-readable.
"""
import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

# Default log levels for different components
DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_CORE_LOG_LEVEL = "INFO"
DEFAULT_TASKS_LOG_LEVEL = "INFO"
DEFAULT_CLI_LOG_LEVEL = "INFO"
DEFAULT_REPOSITORY_LOG_LEVEL = "WARNING"

# Log file configuration
LOG_DIR = "logs"
LOG_FILE = "crisis_summ.log"
MAX_LOG_SIZE = 5 * 1024 * 1024  # 5 MB
BACKUP_COUNT = 3


def setup_logging():
    """
    Set up logging with appropriate handlers, formatters, and levels.

    This function configures logging for the entire toolkit, including:
    - Console logging on stderr
    - File logging with rotation (disable with LOG_TO_FILE=false)
    - Different log levels for different components

    Log levels can be configured through environment variables:
    - LOG_LEVEL: Overall log level (default: INFO)
    - CORE_LOG_LEVEL: Log level for the algorithms in app.core (default: INFO)
    - TASKS_LOG_LEVEL: Log level for pipeline stages (default: INFO)
    - CLI_LOG_LEVEL: Log level for command-line handlers (default: INFO)
    - REPOSITORY_LOG_LEVEL: Log level for file loaders (default: WARNING)
    """
    log_level = os.getenv("LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
    core_log_level = os.getenv("CORE_LOG_LEVEL", DEFAULT_CORE_LOG_LEVEL).upper()
    tasks_log_level = os.getenv("TASKS_LOG_LEVEL", DEFAULT_TASKS_LOG_LEVEL).upper()
    cli_log_level = os.getenv("CLI_LOG_LEVEL", DEFAULT_CLI_LOG_LEVEL).upper()
    repository_log_level = os.getenv("REPOSITORY_LOG_LEVEL", DEFAULT_REPOSITORY_LOG_LEVEL).upper()
    log_to_file = os.getenv("LOG_TO_FILE", "true").lower() == "true"

    # Configure root logger
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Clear existing handlers to avoid duplicate logs
    if root_logger.handlers:
        root_logger.handlers.clear()

    console_formatter = logging.Formatter(
        "%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)
    root_logger.addHandler(console_handler)

    if log_to_file:
        log_dir = Path(os.getenv("LOG_DIR", LOG_DIR))
        log_dir.mkdir(exist_ok=True)
        file_formatter = logging.Formatter(
            "%(asctime)s - %(levelname)s - %(name)s - %(filename)s:%(lineno)d - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )
        file_handler = RotatingFileHandler(
            log_dir / LOG_FILE,
            maxBytes=MAX_LOG_SIZE,
            backupCount=BACKUP_COUNT
        )
        file_handler.setFormatter(file_formatter)
        root_logger.addHandler(file_handler)

    # Configure specific loggers
    logging.getLogger("app.core").setLevel(core_log_level)
    logging.getLogger("app.tasks").setLevel(tasks_log_level)
    logging.getLogger("app.cli").setLevel(cli_log_level)
    logging.getLogger("app.repositories").setLevel(repository_log_level)

    logging.debug("Logging configured with level: %s", log_level)
    logging.debug("Core logging level: %s", core_log_level)
    logging.debug("Tasks logging level: %s", tasks_log_level)
    logging.debug("CLI logging level: %s", cli_log_level)
    logging.debug("Repository logging level: %s", repository_log_level)
