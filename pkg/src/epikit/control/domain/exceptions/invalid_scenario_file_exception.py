from typing import Any, Dict, Optional
from uuid import uuid4

from epikit.control.domain.exceptions.control_exception_codes import ControlExceptionCodes
from epikit.shared.exceptions import DomainException


class InvalidScenarioFileException(DomainException):
    """Exception raised when a control scenario file cannot be parsed into scenarios."""

    def __init__(
        self,
        source: str,
        message: str = "The scenario file is not a list of named constant-control scenarios.",
        problems: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.source = source
        super().__init__(
            ControlExceptionCodes.INVALID_SCENARIO_FILE,
            message,
            details={"source": source, **(problems or {})},
            trace_id=uuid4(),
        )
