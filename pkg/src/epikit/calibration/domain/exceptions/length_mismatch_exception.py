from uuid import uuid4

from epikit.calibration.domain.exceptions.calibration_exception_codes import CalibrationExceptionCodes
from epikit.shared.exceptions import DomainException


class LengthMismatchException(DomainException):
    """Exception raised when observed and model series have different lengths."""

    def __init__(
        self, observed: int, predicted: int, message: str = "Observed and model series differ in length."
    ) -> None:
        self.observed = observed
        self.predicted = predicted
        super().__init__(
            CalibrationExceptionCodes.LENGTH_MISMATCH,
            message,
            details={"observed": observed, "predicted": predicted},
            trace_id=uuid4(),
        )
