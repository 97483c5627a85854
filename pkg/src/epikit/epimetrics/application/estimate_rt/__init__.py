from epikit.epimetrics.application.estimate_rt.estimate_rt_command import EstimateRtCommand
from epikit.epimetrics.application.estimate_rt.estimate_rt_handler import EstimateRtHandler, RtOutcome

__all__ = ["EstimateRtCommand", "EstimateRtHandler", "RtOutcome"]
