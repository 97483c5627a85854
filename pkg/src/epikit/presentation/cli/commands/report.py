from epikit.config.domain.run_config import RunConfig
from epikit.config.infrastructure.config_loader import resolve_parameters
from epikit.model.application.build_report import BuildReportCommand, BuildReportHandler
from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter


def run(config: RunConfig, writer: ArtifactWriter) -> None:
    """Write `report.json`: reproduction numbers, equilibria and sensitivity indices."""
    report = BuildReportHandler().handle(
        BuildReportCommand(parameters=resolve_parameters(config.model), name=config.model.source_name)
    )
    writer.write_json("report.json", report.summary())
