from typing import List, Optional
from uuid import uuid4

from epikit.calibration.domain.exceptions.calibration_exception_codes import CalibrationExceptionCodes
from epikit.shared.exceptions import DomainException


class InvalidIncidenceSeriesException(DomainException):
    """Exception raised when weekly counts do not form a valid incidence series."""

    def __init__(self, message: str = "The incidence series is invalid.", errors: Optional[List[str]] = None) -> None:
        super().__init__(
            CalibrationExceptionCodes.INVALID_INCIDENCE_SERIES,
            message,
            details={"errors": errors or []},
            trace_id=uuid4(),
        )
