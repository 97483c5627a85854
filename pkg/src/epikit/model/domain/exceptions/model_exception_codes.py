from enum import Enum


class ModelExceptionCodes(str, Enum):
    DEGENERATE_PARAMETER = "degenerate_parameter"
    ZERO_REPRODUCTION_NUMBER = "zero_reproduction_number"
    PRESET_NOT_FOUND = "preset_not_found"
    INVALID_PRESET = "invalid_preset"
    EQUILIBRIUM_CERTIFICATE_FAILED = "equilibrium_certificate_failed"
