from epikit.integration.domain.time_grid import TimeGrid
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector
from epikit.shared import BaseValue


class RunSimulationCommand(BaseValue):
    """Simulate the uncontrolled model from `initial_state` over `grid`."""

    parameters: ParameterSet
    initial_state: StateVector
    grid: TimeGrid
