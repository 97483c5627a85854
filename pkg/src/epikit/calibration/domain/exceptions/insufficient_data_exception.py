from uuid import uuid4

from epikit.calibration.domain.exceptions.calibration_exception_codes import CalibrationExceptionCodes
from epikit.shared.exceptions import DomainException


class InsufficientDataException(DomainException):
    """Exception raised when an incidence series is too short for a fit or a regression."""

    def __init__(self, operation: str, weeks: int, minimum: int) -> None:
        self.operation = operation
        super().__init__(
            CalibrationExceptionCodes.INSUFFICIENT_DATA,
            f"{operation} needs at least {minimum} weeks of incidence, got {weeks}.",
            details={"operation": operation, "weeks": weeks, "minimum": minimum},
            trace_id=uuid4(),
        )
