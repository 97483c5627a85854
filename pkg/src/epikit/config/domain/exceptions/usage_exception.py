from uuid import uuid4

from epikit.config.domain.exceptions.config_exception_codes import ConfigExceptionCodes
from epikit.shared.exceptions import DomainException


class UsageException(DomainException):
    """Exception raised when the command line cannot be parsed: an unknown flag, a missing value or a bad type."""

    def __init__(self, reason: str) -> None:
        super().__init__(
            ConfigExceptionCodes.USAGE,
            f"Invalid command line: {reason}",
            details={"reason": reason},
            trace_id=uuid4(),
        )
