from enum import Enum


class ConfigExceptionCodes(str, Enum):
    CONFIGURATION_INVALID = "configuration_invalid"
    INCIDENCE_PARSE = "incidence_parse"
    INCIDENCE_VALIDATION = "incidence_validation"
    UNKNOWN_COMMAND = "unknown_command"
    USAGE = "usage"
