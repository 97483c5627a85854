from uuid import uuid4

from epikit.model.domain.exceptions.model_exception_codes import ModelExceptionCodes
from epikit.shared.exceptions import DomainException


class ZeroReproductionNumberException(DomainException):
    """Exception raised when an elasticity of R0 is requested while R0 is zero."""

    def __init__(self, parameter: str, message: str = "R0 is zero; its elasticity is undefined.") -> None:
        self.parameter = parameter
        super().__init__(
            ModelExceptionCodes.ZERO_REPRODUCTION_NUMBER,
            message,
            details={"parameter": parameter},
            trace_id=uuid4(),
        )
