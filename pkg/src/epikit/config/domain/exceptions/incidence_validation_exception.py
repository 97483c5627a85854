from typing import Optional
from uuid import uuid4

from epikit.config.domain.exceptions.config_exception_codes import ConfigExceptionCodes
from epikit.shared.exceptions import DomainException


class IncidenceValidationException(DomainException):
    """Exception raised when parsed incidence rows break a series invariant.

    Attributes:
        invariant (str): `non_negative_counts`, `increasing_weeks` or `consecutive_weeks`.
    """

    def __init__(self, path: str, invariant: str, line: Optional[int] = None, message: Optional[str] = None) -> None:
        self.path = path
        self.invariant = invariant
        self.line = line
        super().__init__(
            ConfigExceptionCodes.INCIDENCE_VALIDATION,
            message or f"{path} violates {invariant}" + (f" at line {line}" if line is not None else ""),
            details={"path": path, "invariant": invariant, "line": line},
            trace_id=uuid4(),
        )
