"""JSON-lines logging on stderr.

Modules log through `logging.getLogger(__name__)` and pass structured fields as `extra={"context": {...}}`;
`configure_logging` installs the formatter on the `epikit` logger once per process.
"""

import logging
import sys
from typing import Any, Dict, Optional, TextIO, Union

from pythonjsonlogger.json import JsonFormatter

from epikit.observability.domain.log_level_enum import LogLevelEnum

ROOT_LOGGER = "epikit"
_HANDLER_NAME = "epikit-structured"
_FIELDS = "%(asctime)s %(levelname)s %(name)s %(message)s"
_RENAMED = {"asctime": "time", "levelname": "level", "name": "logger"}


class JsonLineFormatter(JsonFormatter):
    """One JSON object per record: time, level, logger, message and, when present, context and exception."""

    def __init__(self) -> None:
        super().__init__(_FIELDS, datefmt="%Y-%m-%dT%H:%M:%S", rename_fields=_RENAMED, json_default=str)

    def process_log_record(self, log_record: Dict[str, Any]) -> Dict[str, Any]:
        if "exc_info" in log_record:
            log_record["exception"] = log_record.pop("exc_info")
        return log_record


def configure_logging(
    level: Union[LogLevelEnum, str] = LogLevelEnum.INFO, stream: Optional[TextIO] = None
) -> logging.Logger:
    """Send `epikit` records at `level` and above to `stream` (stderr by default) as JSON lines.

    Calling it again replaces the handler instead of adding a second one.
    """
    resolved = LogLevelEnum(str(level).upper() if not isinstance(level, LogLevelEnum) else level)
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        if handler.get_name() == _HANDLER_NAME:
            logger.removeHandler(handler)
    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(JsonLineFormatter())
    logger.addHandler(handler)
    logger.setLevel(resolved.value)
    logger.propagate = False
    return logger
