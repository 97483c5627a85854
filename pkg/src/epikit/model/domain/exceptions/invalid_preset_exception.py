from typing import Any, Dict, Optional
from uuid import uuid4

from epikit.model.domain.exceptions.model_exception_codes import ModelExceptionCodes
from epikit.shared.exceptions import DomainException


class InvalidPresetException(DomainException):
    """Exception raised when a parameter file does not hold exactly the model's rate keys."""

    def __init__(
        self, source: str, message: str = "The parameter file is invalid.", problems: Optional[Dict[str, Any]] = None
    ) -> None:
        self.source = source
        super().__init__(
            ModelExceptionCodes.INVALID_PRESET,
            message,
            details={"source": source, **(problems or {})},
            trace_id=uuid4(),
        )
