import logging
import sys

LOGGER_NAME = "knot.skein.homfly"
LOG_FORMAT = "%(asctime)s:%(levelname)s:%(name)s:%(message)s"


class _CurrentStderr(logging.StreamHandler):
    """A stream handler that always writes to the current sys.stderr.

    stdout carries the JSON results of the command line, so every record,
    whatever its level, goes to stderr.
    """

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def get_homfly_logger():
    """The package logger, with a single stderr handler.

    Returns:
        A logger object
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.propagate = False

    if not any(isinstance(h, _CurrentStderr) for h in logger.handlers):
        handler = _CurrentStderr()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)

    return logger
