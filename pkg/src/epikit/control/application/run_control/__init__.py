from epikit.control.application.run_control.run_control_command import RunControlCommand
from epikit.control.application.run_control.run_control_handler import ControlOutcome, RunControlHandler

__all__ = ["ControlOutcome", "RunControlCommand", "RunControlHandler"]
