from typing import Annotated, Tuple

from pydantic import Field

from epikit.control.domain.control_scenario import FIXED_SCENARIOS, ControlScenario
from epikit.control.domain.control_weights import ControlWeights
from epikit.control.domain.sweep_settings import SweepSettings
from epikit.integration.domain.time_grid import TimeGrid
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector
from epikit.shared import BaseValue


class RunControlCommand(BaseValue):
    """Optimise the three controls and evaluate the constant-control scenarios alongside."""

    parameters: ParameterSet
    initial_state: StateVector
    grid: TimeGrid
    weights: ControlWeights = ControlWeights()
    settings: SweepSettings = SweepSettings()
    scenarios: Annotated[Tuple[ControlScenario, ...], Field(default=FIXED_SCENARIOS)]
