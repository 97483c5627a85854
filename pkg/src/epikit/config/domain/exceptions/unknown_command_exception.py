from typing import List
from uuid import uuid4

from epikit.config.domain.exceptions.config_exception_codes import ConfigExceptionCodes
from epikit.shared.exceptions import DomainException


class UnknownCommandException(DomainException):
    """Exception raised when the requested subcommand does not exist."""

    def __init__(self, command: str, available: List[str]) -> None:
        self.command = command
        super().__init__(
            ConfigExceptionCodes.UNKNOWN_COMMAND,
            f"Unknown command {command!r}.",
            details={"command": command, "available": available},
            trace_id=uuid4(),
        )
