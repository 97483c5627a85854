from epikit.integration.application.run_simulation.run_simulation_command import RunSimulationCommand
from epikit.integration.application.run_simulation.run_simulation_handler import (
    RunSimulationHandler,
    SimulationOutcome,
)

__all__ = ["RunSimulationCommand", "RunSimulationHandler", "SimulationOutcome"]
