from uuid import uuid4

from epikit.integration.domain.exceptions.integration_exception_codes import IntegrationExceptionCodes
from epikit.shared.exceptions import DomainException


class NonFiniteStateException(DomainException):
    """Exception raised when an integration stage produces NaN or infinity."""

    def __init__(
        self, step_index: int, time: float, message: str = "The integration produced a non-finite state."
    ) -> None:
        self.step_index = step_index
        self.time = time
        super().__init__(
            IntegrationExceptionCodes.NON_FINITE_STATE,
            message,
            details={"step_index": step_index, "time": time},
            trace_id=uuid4(),
        )
