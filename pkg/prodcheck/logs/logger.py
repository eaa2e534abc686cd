import logging
import os
from concurrent_log_handler import ConcurrentRotatingFileHandler as RotatingFileHandler

from ..config import settings


def setup_logger(name: str, log_file: str | None = None, level: int | str | None = None) -> logging.Logger:
    log_file = log_file or settings.log_file
    level = level or settings.log_level

    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    if os.path.dirname(log_file):
        os.makedirs(os.path.dirname(log_file), exist_ok=True)

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    file_handler = RotatingFileHandler(log_file, maxBytes=1_000_000, backupCount=3)
    file_handler.setFormatter(formatter)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)

    logger.setLevel(level)
    logger.addHandler(file_handler)
    logger.addHandler(console_handler)
    logger.propagate = False

    return logger
