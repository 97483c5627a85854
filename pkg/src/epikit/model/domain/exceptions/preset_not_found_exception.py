from typing import Sequence
from uuid import uuid4

from epikit.model.domain.exceptions.model_exception_codes import ModelExceptionCodes
from epikit.shared.exceptions import DomainException


class PresetNotFoundException(DomainException):
    """Exception raised when a country preset or parameter file does not exist."""

    def __init__(self, name: str, available: Sequence[str] = (), message: str = "The preset was not found.") -> None:
        self.name = name
        super().__init__(
            ModelExceptionCodes.PRESET_NOT_FOUND,
            message,
            details={"name": name, "available": list(available)},
            trace_id=uuid4(),
        )
