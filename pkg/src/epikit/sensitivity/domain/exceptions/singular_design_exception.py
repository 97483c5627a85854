from uuid import uuid4

from epikit.sensitivity.domain.exceptions.sensitivity_exception_codes import SensitivityExceptionCodes
from epikit.shared.exceptions import DomainException


class SingularDesignException(DomainException):
    """Exception raised when a ranked design column is constant or fully explained by the others."""

    def __init__(self, parameter: str, message: str = "A ranked design column carries no information.") -> None:
        self.parameter = parameter
        super().__init__(
            SensitivityExceptionCodes.SINGULAR_DESIGN,
            message,
            details={"parameter": parameter},
            trace_id=uuid4(),
        )
