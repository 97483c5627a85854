from uuid import uuid4

from epikit.sensitivity.domain.exceptions.sensitivity_exception_codes import SensitivityExceptionCodes
from epikit.shared.exceptions import DomainException


class InsufficientSamplesException(DomainException):
    """Exception raised when a statistic needs more samples than it was given."""

    def __init__(
        self, available: int, required: int, message: str = "Not enough samples for this statistic."
    ) -> None:
        self.available = available
        self.required = required
        super().__init__(
            SensitivityExceptionCodes.INSUFFICIENT_SAMPLES,
            message,
            details={"available": available, "required": required},
            trace_id=uuid4(),
        )
