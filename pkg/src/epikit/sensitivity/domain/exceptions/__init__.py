from epikit.sensitivity.domain.exceptions.empty_input_exception import EmptyInputException
from epikit.sensitivity.domain.exceptions.insufficient_samples_exception import InsufficientSamplesException
from epikit.sensitivity.domain.exceptions.invalid_range_exception import InvalidRangeException
from epikit.sensitivity.domain.exceptions.sensitivity_exception_codes import SensitivityExceptionCodes
from epikit.sensitivity.domain.exceptions.singular_design_exception import SingularDesignException

__all__ = [
    "EmptyInputException",
    "InsufficientSamplesException",
    "InvalidRangeException",
    "SensitivityExceptionCodes",
    "SingularDesignException",
]
