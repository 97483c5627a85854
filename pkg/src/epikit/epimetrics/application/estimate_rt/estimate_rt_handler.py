import logging
from typing import Optional

from epikit.epimetrics.application.estimate_rt.estimate_rt_command import EstimateRtCommand
from epikit.epimetrics.domain.generation_interval import GenerationInterval
from epikit.epimetrics.domain.renewal import effective_r_envelope, effective_r_series
from epikit.epimetrics.domain.rt_series import RtEnvelope, RtSeries
from epikit.shared import BaseValue

logger = logging.getLogger(__name__)


class RtOutcome(BaseValue):
    generation_interval: GenerationInterval
    series: RtSeries
    envelope: Optional[RtEnvelope] = None


class EstimateRtHandler:
    def handle(self, command: EstimateRtCommand) -> RtOutcome:
        gi = command.generation_interval
        series = effective_r_series(command.data, gi)
        envelope = None
        if command.b1_range is not None or command.b2_range is not None:
            envelope = effective_r_envelope(
                command.data,
                command.b1_range if command.b1_range is not None else (gi.b1, gi.b1),
                command.b2_range if command.b2_range is not None else (gi.b2, gi.b2),
                command.resolution,
            )
        logger.info(
            "Rt estimated",
            extra={
                "context": {
                    "weeks": command.data.size,
                    "mean_generation_interval": gi.mean,
                    "defined_from": series.defined_from,
                    "envelope": envelope is not None,
                }
            },
        )
        return RtOutcome(generation_interval=gi, series=series, envelope=envelope)
