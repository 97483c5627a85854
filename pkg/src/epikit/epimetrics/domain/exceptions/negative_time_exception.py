from uuid import uuid4

from epikit.epimetrics.domain.exceptions.epimetrics_exception_codes import EpimetricsExceptionCodes
from epikit.shared.exceptions import DomainException


class NegativeTimeException(DomainException):
    """Exception raised when the generation-interval density is queried before time zero."""

    def __init__(self, t: float, message: str = "Generation intervals are defined for t >= 0 only.") -> None:
        self.t = t
        super().__init__(
            EpimetricsExceptionCodes.NEGATIVE_TIME,
            message,
            details={"t": t},
            trace_id=uuid4(),
        )
