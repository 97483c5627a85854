from uuid import uuid4

from epikit.shared.exceptions.common_exception_codes import CommonExceptionCodes
from epikit.shared.exceptions.domain_exception import DomainException


class ArtifactWriteException(DomainException):
    """Exception raised when an output artifact cannot be written."""

    def __init__(self, path: str, reason: str, message: str = "The artifact could not be written.") -> None:
        self.path = path
        super().__init__(
            CommonExceptionCodes.IO_EXCEPTION,
            message,
            details={"path": path, "reason": reason},
            trace_id=uuid4(),
        )
