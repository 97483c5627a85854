from epikit.model.application.build_report.build_report_command import BuildReportCommand
from epikit.model.application.build_report.build_report_handler import BuildReportHandler, ModelReport

__all__ = ["BuildReportCommand", "BuildReportHandler", "ModelReport"]
