import logging
from functools import partial

import numpy as np

from epikit.integration.application.run_simulation.run_simulation_command import RunSimulationCommand
from epikit.integration.domain.runge_kutta import integrate_forward
from epikit.integration.domain.trajectory import Trajectory
from epikit.integration.domain.trajectory_checks import check_population_bound, check_positivity
from epikit.integration.domain.trajectory_report import TrajectoryReport
from epikit.model.domain.dynamics import model_field
from epikit.model.domain.parameter_set import ParameterSet
from epikit.shared import BaseValue

logger = logging.getLogger(__name__)


class SimulationOutcome(BaseValue):
    trajectory: Trajectory
    positivity: TrajectoryReport
    population_bound: TrajectoryReport


def _autonomous(p: ParameterSet, _t: float, x: np.ndarray) -> np.ndarray:
    return model_field(x, p)


class RunSimulationHandler:
    def handle(self, command: RunSimulationCommand) -> SimulationOutcome:
        trajectory = integrate_forward(partial(_autonomous, command.parameters), command.initial_state, command.grid)
        positivity = check_positivity(trajectory)
        bound = check_population_bound(trajectory, command.parameters)
        logger.info(
            "Simulation finished",
            extra={
                "context": {
                    "n_steps": command.grid.n_steps,
                    "positivity_passed": positivity.passed,
                    "population_bound_passed": bound.passed,
                }
            },
        )
        if not (positivity.passed and bound.passed):
            logger.warning(
                "Trajectory check failed",
                extra={"context": {"positivity": repr(positivity), "population_bound": repr(bound)}},
            )
        return SimulationOutcome(trajectory=trajectory, positivity=positivity, population_bound=bound)
