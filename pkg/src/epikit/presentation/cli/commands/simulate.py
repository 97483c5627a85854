from epikit.config.domain.run_config import RunConfig
from epikit.config.infrastructure.config_loader import resolve_parameters
from epikit.integration.application.run_simulation import RunSimulationCommand, RunSimulationHandler
from epikit.model.domain.compartment_vector import COMPARTMENTS
from epikit.presentation.cli.commands._shared import simulation_grid
from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter


def run(config: RunConfig, writer: ArtifactWriter) -> None:
    """Write `trajectory.csv` (t, S..T) and `reports.json` with the positivity and population-bound checks."""
    outcome = RunSimulationHandler().handle(
        RunSimulationCommand(
            parameters=resolve_parameters(config.model),
            initial_state=config.simulation.initial_state,
            grid=simulation_grid(config.simulation),
        )
    )
    writer.write_csv("trajectory.csv", outcome.trajectory.to_frame(COMPARTMENTS))
    writer.write_json(
        "reports.json",
        {"positivity": outcome.positivity.to_record(), "population_bound": outcome.population_bound.to_record()},
    )
