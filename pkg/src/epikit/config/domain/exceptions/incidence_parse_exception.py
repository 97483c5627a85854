from typing import Optional
from uuid import uuid4

from epikit.config.domain.exceptions.config_exception_codes import ConfigExceptionCodes
from epikit.shared.exceptions import DomainException


class IncidenceParseException(DomainException):
    """Exception raised when an incidence CSV is not well-formed `week,new_cases` text."""

    def __init__(self, path: str, line: int, reason: str, content: Optional[str] = None) -> None:
        self.path = path
        self.line = line
        super().__init__(
            ConfigExceptionCodes.INCIDENCE_PARSE,
            f"Cannot parse {path} at line {line}: {reason}",
            details={"path": path, "line": line, "reason": reason, "content": content},
            trace_id=uuid4(),
        )
