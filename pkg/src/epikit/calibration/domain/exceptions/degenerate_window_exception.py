from typing import Optional, Tuple
from uuid import uuid4

from epikit.calibration.domain.exceptions.calibration_exception_codes import CalibrationExceptionCodes
from epikit.shared.exceptions import DomainException


class DegenerateWindowException(DomainException):
    """Exception raised when a regression window has too few points or no spread in its regressor."""

    def __init__(
        self,
        window: Optional[Tuple[int, int]],
        message: str = "The regression window is degenerate.",
        points: int = 0,
    ) -> None:
        self.window = window
        super().__init__(
            CalibrationExceptionCodes.DEGENERATE_WINDOW,
            message,
            details={"window": list(window) if window is not None else None, "points": points},
            trace_id=uuid4(),
        )
