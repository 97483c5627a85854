from typing import Any, Dict, Optional
from uuid import uuid4

from epikit.calibration.domain.exceptions.calibration_exception_codes import CalibrationExceptionCodes
from epikit.shared.exceptions import DomainException


class InvalidBoundsException(DomainException):
    """Exception raised when the free parameters or their bounds cannot be searched."""

    def __init__(
        self,
        parameter: str,
        message: str = "The bounds of a free parameter are invalid.",
        bounds: Optional[Any] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.parameter = parameter
        super().__init__(
            CalibrationExceptionCodes.INVALID_BOUNDS,
            message,
            details={"parameter": parameter, "bounds": bounds, **(details or {})},
            trace_id=uuid4(),
        )
