from enum import Enum


class SensitivityExceptionCodes(str, Enum):
    INVALID_RANGE = "invalid_range"
    INSUFFICIENT_SAMPLES = "insufficient_samples"
    SINGULAR_DESIGN = "singular_design"
    EMPTY_INPUT = "empty_input"
