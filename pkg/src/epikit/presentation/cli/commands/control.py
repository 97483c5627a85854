from epikit.config.domain.run_config import RunConfig
from epikit.config.infrastructure.config_loader import resolve_parameters
from epikit.control.application.run_control import RunControlCommand, RunControlHandler
from epikit.control.domain.control_scenario import FIXED_SCENARIOS
from epikit.control.infrastructure.scenario_repository import load_scenario_file
from epikit.integration.domain.time_grid import TimeGrid
from epikit.model.domain.compartment_vector import COMPARTMENTS
from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter


def run(config: RunConfig, writer: ArtifactWriter) -> None:
    """Write the optimised sweep (`sweep.csv`, `summary.json`) and one CSV per constant scenario."""
    section = config.control
    t0 = config.simulation.t0
    command = RunControlCommand(
        parameters=resolve_parameters(config.model),
        initial_state=config.simulation.initial_state,
        grid=TimeGrid.from_step(t0, t0 + section.weeks, section.step),
        weights=section.weights,
        settings=section.settings,
        scenarios=FIXED_SCENARIOS + tuple(load_scenario_file(section.scenario_file)),
    )
    outcome = RunControlHandler().handle(command)
    writer.write_csv("sweep.csv", outcome.optimized.to_frame())
    summary = outcome.summary()
    summary["optimized"]["change_history"] = list(outcome.optimized.change_history)
    writer.write_json("summary.json", summary)
    for evaluation in outcome.scenarios:
        frame = evaluation.states.to_frame(COMPARTMENTS)
        for name, column in evaluation.controls.to_frame().drop(columns="t").items():
            frame[name] = column.to_numpy()
        writer.write_csv(f"scenarios/{evaluation.name}.csv", frame)
