from enum import Enum


class EpimetricsExceptionCodes(str, Enum):
    NEGATIVE_TIME = "negative_time"
    INVALID_RATE_RANGE = "invalid_rate_range"
