from epikit.sensitivity.application.run_sensitivity.run_sensitivity_command import RunSensitivityCommand
from epikit.sensitivity.application.run_sensitivity.run_sensitivity_handler import (
    RunSensitivityHandler,
    SensitivityOutcome,
)

__all__ = ["RunSensitivityCommand", "RunSensitivityHandler", "SensitivityOutcome"]
