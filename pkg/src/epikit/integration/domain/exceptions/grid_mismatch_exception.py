from typing import Any
from uuid import uuid4

from epikit.integration.domain.exceptions.integration_exception_codes import IntegrationExceptionCodes
from epikit.shared.exceptions import DomainException


class GridMismatchException(DomainException):
    """Exception raised when two series that must share a time grid do not."""

    def __init__(self, expected: Any, actual: Any, message: str = "The time grids do not coincide.") -> None:
        super().__init__(
            IntegrationExceptionCodes.GRID_MISMATCH,
            message,
            details={"expected": repr(expected), "actual": repr(actual)},
            trace_id=uuid4(),
        )
