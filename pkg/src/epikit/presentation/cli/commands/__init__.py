from typing import Callable, Dict

from epikit.config.domain.command_name_enum import CommandNameEnum
from epikit.config.domain.run_config import RunConfig
from epikit.presentation.cli.commands import control, fit, report, rt, sensitivity, simulate
from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter

CommandRunner = Callable[[RunConfig, ArtifactWriter], None]

COMMANDS: Dict[str, CommandRunner] = {
    CommandNameEnum.SIMULATE.value: simulate.run,
    CommandNameEnum.CONTROL.value: control.run,
    CommandNameEnum.FIT.value: fit.run,
    CommandNameEnum.SENSITIVITY.value: sensitivity.run,
    CommandNameEnum.RT.value: rt.run,
    CommandNameEnum.REPORT.value: report.run,
}

__all__ = ["COMMANDS", "CommandRunner"]
