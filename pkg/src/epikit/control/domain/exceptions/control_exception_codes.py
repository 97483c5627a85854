from enum import Enum


class ControlExceptionCodes(str, Enum):
    ZERO_EFFORT_WEIGHT = "zero_effort_weight"
    INVALID_SCENARIO_FILE = "invalid_scenario_file"
