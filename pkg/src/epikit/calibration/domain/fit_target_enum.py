from enum import Enum


class FitTargetEnum(str, Enum):
    """Which view of the incidence data the least-squares objective compares."""

    CUMULATIVE = "cumulative"
    WEEKLY = "weekly"
