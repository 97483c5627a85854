import logging
from typing import Any, Dict, Optional

from epikit.model.application.build_report.build_report_command import BuildReportCommand
from epikit.model.domain.equilibria import disease_free_equilibrium, endemic_equilibrium
from epikit.model.domain.local_sensitivity import numerical_sensitivity_index, sensitivity_indices
from epikit.model.domain.parameter_name_enum import ParameterNameEnum
from epikit.model.domain.reproduction_numbers import endemic_threshold, r0_with_control, r0_without_control
from epikit.model.domain.state_vector import StateVector
from epikit.shared import BaseValue

logger = logging.getLogger(__name__)


class ModelReport(BaseValue):
    """Reproduction numbers, equilibria and sensitivity indices of a parameter set."""

    name: Optional[str] = None
    parameters: Dict[str, float]
    r0_without_control: float
    r0_with_control: float
    population: float
    endemic_threshold: float
    disease_free_equilibrium: StateVector
    endemic_equilibrium: Optional[StateVector] = None
    sensitivity_indices: Dict[str, float]
    numerical_sensitivity_indices: Dict[str, float]

    def summary(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True)


class BuildReportHandler:
    def handle(self, command: BuildReportCommand) -> ModelReport:
        p = command.parameters
        dfe = disease_free_equilibrium(p)
        population = command.population if command.population is not None else dfe.total
        report = ModelReport(
            name=command.name,
            parameters=p.to_symbols(),
            r0_without_control=r0_without_control(p),
            r0_with_control=r0_with_control(p, population),
            population=population,
            endemic_threshold=endemic_threshold(p),
            disease_free_equilibrium=dfe,
            endemic_equilibrium=endemic_equilibrium(p),
            sensitivity_indices=sensitivity_indices(p),
            numerical_sensitivity_indices={
                name.value: numerical_sensitivity_index(p, name) for name in ParameterNameEnum
            },
        )
        logger.info(
            "Model report built",
            extra={
                "context": {
                    "r0_without_control": report.r0_without_control,
                    "endemic": report.endemic_equilibrium is not None,
                }
            },
        )
        return report
