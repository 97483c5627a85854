from epikit.epimetrics.domain.exceptions.epimetrics_exception_codes import EpimetricsExceptionCodes
from epikit.epimetrics.domain.exceptions.invalid_rate_range_exception import InvalidRateRangeException
from epikit.epimetrics.domain.exceptions.negative_time_exception import NegativeTimeException

__all__ = ["EpimetricsExceptionCodes", "InvalidRateRangeException", "NegativeTimeException"]
