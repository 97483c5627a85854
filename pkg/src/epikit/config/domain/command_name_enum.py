from enum import Enum


class CommandNameEnum(str, Enum):
    SIMULATE = "simulate"
    CONTROL = "control"
    FIT = "fit"
    SENSITIVITY = "sensitivity"
    RT = "rt"
    REPORT = "report"
