from epikit.integration.domain.exceptions.grid_mismatch_exception import GridMismatchException
from epikit.integration.domain.exceptions.integration_exception_codes import IntegrationExceptionCodes
from epikit.integration.domain.exceptions.non_finite_state_exception import NonFiniteStateException

__all__ = [
    "IntegrationExceptionCodes",
    "NonFiniteStateException",
    "GridMismatchException",
]
