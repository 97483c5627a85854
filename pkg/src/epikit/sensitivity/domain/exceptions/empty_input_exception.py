from uuid import uuid4

from epikit.sensitivity.domain.exceptions.sensitivity_exception_codes import SensitivityExceptionCodes
from epikit.shared.exceptions import DomainException


class EmptyInputException(DomainException):
    """Exception raised when a statistic receives no usable values."""

    def __init__(self, what: str, message: str = "No usable values were given.") -> None:
        self.what = what
        super().__init__(
            SensitivityExceptionCodes.EMPTY_INPUT,
            message,
            details={"input": what},
            trace_id=uuid4(),
        )
