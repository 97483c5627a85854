from typing import Dict
from uuid import uuid4

from epikit.control.domain.exceptions.control_exception_codes import ControlExceptionCodes
from epikit.shared.exceptions import DomainException


class ZeroEffortWeightException(DomainException):
    """Exception raised when an effort weight a3, a4 or a5 is zero where the control law divides by it."""

    def __init__(
        self, weights: Dict[str, float], message: str = "The effort weights a3, a4 and a5 must be positive."
    ) -> None:
        super().__init__(
            ControlExceptionCodes.ZERO_EFFORT_WEIGHT,
            message,
            details={"weights": weights},
            trace_id=uuid4(),
        )
