from enum import Enum


class CalibrationExceptionCodes(str, Enum):
    LENGTH_MISMATCH = "length_mismatch"
    INVALID_BOUNDS = "invalid_bounds"
    DEGENERATE_WINDOW = "degenerate_window"
    INVALID_INCIDENCE_SERIES = "invalid_incidence_series"
    INSUFFICIENT_DATA = "insufficient_data"
