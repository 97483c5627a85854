from typing import Any, Dict, Optional
from uuid import uuid4

from epikit.model.domain.exceptions.model_exception_codes import ModelExceptionCodes
from epikit.shared.exceptions import DomainException


class DegenerateParameterException(DomainException):
    """Exception raised when a formula would divide by zero for the given parameters."""

    def __init__(
        self,
        quantity: str,
        message: str = "The parameters make a denominator vanish.",
        values: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.quantity = quantity
        super().__init__(
            ModelExceptionCodes.DEGENERATE_PARAMETER,
            message,
            details={"quantity": quantity, "values": values or {}},
            trace_id=uuid4(),
        )
