from epikit.config.domain.run_config import RunConfig
from epikit.config.infrastructure.config_loader import resolve_parameters
from epikit.epimetrics.application.estimate_rt import EstimateRtCommand, EstimateRtHandler
from epikit.epimetrics.domain.generation_interval import GenerationInterval
from epikit.presentation.cli.commands._shared import load_data
from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter


def run(config: RunConfig, writer: ArtifactWriter) -> None:
    """Write `rt.csv` (week, rt, defined) and, when rate ranges are set, `rt_envelope.csv`."""
    section = config.rt
    bundle = load_data(section.data)
    outcome = EstimateRtHandler().handle(
        EstimateRtCommand(
            data=bundle.series,
            generation_interval=GenerationInterval.from_parameters(resolve_parameters(config.model)),
            b1_range=section.b1_range,
            b2_range=section.b2_range,
            resolution=section.resolution,
        )
    )
    writer.write_csv("rt.csv", outcome.series.to_frame())
    if outcome.envelope is not None:
        writer.write_csv("rt_envelope.csv", outcome.envelope.to_frame())
