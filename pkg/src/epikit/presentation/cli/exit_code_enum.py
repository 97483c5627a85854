from enum import IntEnum


class ExitCodeEnum(IntEnum):
    """Process exit status per failure kind; member names match the exception codes they stand for."""

    SUCCESS = 0
    INTERNAL_ERROR_EXCEPTION = 1
    USAGE = 2
    CONFIGURATION_INVALID = 10
    UNKNOWN_COMMAND = 11
    INCIDENCE_PARSE = 12
    INCIDENCE_VALIDATION = 13
    IO_EXCEPTION = 14
    VALIDATION_EXCEPTION = 15
    DEGENERATE_PARAMETER = 20
    ZERO_REPRODUCTION_NUMBER = 21
    PRESET_NOT_FOUND = 22
    INVALID_PRESET = 23
    EQUILIBRIUM_CERTIFICATE_FAILED = 24
    NON_FINITE_STATE = 30
    GRID_MISMATCH = 31
    ZERO_EFFORT_WEIGHT = 40
    INVALID_SCENARIO_FILE = 41
    LENGTH_MISMATCH = 50
    INVALID_BOUNDS = 51
    DEGENERATE_WINDOW = 52
    INVALID_INCIDENCE_SERIES = 53
    INSUFFICIENT_DATA = 54
    NEGATIVE_TIME = 60
    INVALID_RATE_RANGE = 61
    INVALID_RANGE = 70
    INSUFFICIENT_SAMPLES = 71
    SINGULAR_DESIGN = 72
    EMPTY_INPUT = 73

    @classmethod
    def for_code(cls, code: str) -> "ExitCodeEnum":
        return cls.__members__.get(code.upper(), cls.INTERNAL_ERROR_EXCEPTION)
