from epikit.calibration.domain.exceptions.calibration_exception_codes import CalibrationExceptionCodes
from epikit.calibration.domain.exceptions.degenerate_window_exception import DegenerateWindowException
from epikit.calibration.domain.exceptions.insufficient_data_exception import InsufficientDataException
from epikit.calibration.domain.exceptions.invalid_bounds_exception import InvalidBoundsException
from epikit.calibration.domain.exceptions.invalid_incidence_series_exception import InvalidIncidenceSeriesException
from epikit.calibration.domain.exceptions.length_mismatch_exception import LengthMismatchException

__all__ = [
    "CalibrationExceptionCodes",
    "DegenerateWindowException",
    "InsufficientDataException",
    "InvalidBoundsException",
    "InvalidIncidenceSeriesException",
    "LengthMismatchException",
]
