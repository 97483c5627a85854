from epikit.config.domain.command_name_enum import CommandNameEnum
from epikit.config.domain.data_bundle import DataBundle
from epikit.config.domain.run_config import (
    ControlSection,
    FitSection,
    ModelSection,
    RtSection,
    RunConfig,
    SensitivitySection,
    SimulationSection,
)

__all__ = [
    "CommandNameEnum",
    "ControlSection",
    "DataBundle",
    "FitSection",
    "ModelSection",
    "RtSection",
    "RunConfig",
    "SensitivitySection",
    "SimulationSection",
]
