from typing import Any, Dict, Optional
from uuid import uuid4

from epikit.sensitivity.domain.exceptions.sensitivity_exception_codes import SensitivityExceptionCodes
from epikit.shared.exceptions import DomainException


class InvalidRangeException(DomainException):
    """Exception raised when a sampling range is empty, reversed or outside the parameter's domain."""

    def __init__(
        self,
        name: str,
        message: str = "The parameter range is invalid.",
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.name = name
        super().__init__(
            SensitivityExceptionCodes.INVALID_RANGE,
            message,
            details={"name": name, **(details or {})},
            trace_id=uuid4(),
        )
