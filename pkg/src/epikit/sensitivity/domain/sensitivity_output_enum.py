from enum import Enum


class SensitivityOutputEnum(str, Enum):
    """Scalar model outputs a global sensitivity design can be evaluated against."""

    R0 = "r0"
    R0_WITH_CONTROL = "r0_with_control"
    PEAK_INFECTED = "peak_infected"
    CUMULATIVE_INFECTED = "cumulative_infected"
