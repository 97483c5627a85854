from typing import Any, Dict, Optional
from uuid import uuid4

from epikit.config.domain.exceptions.config_exception_codes import ConfigExceptionCodes
from epikit.shared.exceptions import DomainException


class ConfigurationException(DomainException):
    """Exception raised when a run configuration cannot be read, merged or validated."""

    def __init__(
        self,
        message: str = "The run configuration is invalid.",
        source: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.source = source
        super().__init__(
            ConfigExceptionCodes.CONFIGURATION_INVALID,
            message,
            details={"source": source, **(details or {})},
            trace_id=uuid4(),
        )
