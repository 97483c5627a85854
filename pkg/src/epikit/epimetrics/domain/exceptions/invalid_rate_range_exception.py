from typing import Sequence
from uuid import uuid4

from epikit.epimetrics.domain.exceptions.epimetrics_exception_codes import EpimetricsExceptionCodes
from epikit.shared.exceptions import DomainException


class InvalidRateRangeException(DomainException):
    """Exception raised when a generation-interval rate range is not a positive, ordered interval."""

    def __init__(
        self, rate: str, bounds: Sequence[float], message: str = "Rate ranges need 0 < low <= high."
    ) -> None:
        self.rate = rate
        super().__init__(
            EpimetricsExceptionCodes.INVALID_RATE_RANGE,
            message,
            details={"rate": rate, "bounds": [float(value) for value in bounds]},
            trace_id=uuid4(),
        )
