from epikit.control.domain.exceptions.control_exception_codes import ControlExceptionCodes
from epikit.control.domain.exceptions.invalid_scenario_file_exception import InvalidScenarioFileException
from epikit.control.domain.exceptions.zero_effort_weight_exception import ZeroEffortWeightException

__all__ = ["ControlExceptionCodes", "InvalidScenarioFileException", "ZeroEffortWeightException"]
