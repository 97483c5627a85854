from uuid import uuid4

from epikit.model.domain.exceptions.model_exception_codes import ModelExceptionCodes
from epikit.shared.exceptions import DomainException


class EquilibriumCertificateException(DomainException):
    """Exception raised when a computed equilibrium fails its residual certificate."""

    def __init__(
        self, residual: float, tolerance: float, message: str = "The equilibrium residual exceeds its tolerance."
    ) -> None:
        self.residual = residual
        super().__init__(
            ModelExceptionCodes.EQUILIBRIUM_CERTIFICATE_FAILED,
            message,
            details={"residual": residual, "tolerance": tolerance},
            trace_id=uuid4(),
        )
