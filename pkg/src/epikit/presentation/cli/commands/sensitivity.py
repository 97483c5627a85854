from typing import Dict, Optional, Tuple

import numpy as np
import pandas as pd

from epikit.config.domain.exceptions import ConfigurationException
from epikit.config.domain.run_config import RunConfig
from epikit.config.infrastructure.config_loader import resolve_parameters
from epikit.presentation.cli.commands._shared import simulation_grid
from epikit.sensitivity.application.run_sensitivity import RunSensitivityCommand, RunSensitivityHandler
from epikit.sensitivity.domain.parameter_range import DEFAULT_RANGES, ParameterRange
from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter


def _ranges(configured: Optional[Dict[str, Tuple[float, float]]]) -> Tuple[ParameterRange, ...]:
    if configured is None:
        return DEFAULT_RANGES
    return tuple(ParameterRange.of(name, low, high) for name, (low, high) in configured.items())


def _axis(name: Optional[str], ranges: Tuple[ParameterRange, ...], setting: str) -> Optional[ParameterRange]:
    if name is None:
        return None
    for item in ranges + DEFAULT_RANGES:
        if item.name == name:
            return item
    raise ConfigurationException("A grid axis has no sampling range.", source=setting, details={"name": name})


def run(config: RunConfig, writer: ArtifactWriter) -> None:
    """Write the design, PRCC and bias artifacts, plus the level grid when both axes are set."""
    section = config.sensitivity
    ranges = _ranges(section.ranges)
    outcome = RunSensitivityHandler().handle(
        RunSensitivityCommand(
            parameters=resolve_parameters(config.model),
            ranges=ranges,
            n_samples=section.n_samples,
            seed=config.seed,
            output=section.output,
            intervals=section.intervals,
            bins=section.bins,
            grid_x=_axis(section.grid_x, ranges, "sensitivity.grid_x"),
            grid_y=_axis(section.grid_y, ranges, "sensitivity.grid_y"),
            grid_resolution=section.grid_resolution,
            levels=section.levels,
            max_workers=section.max_workers,
            initial_state=config.simulation.initial_state,
            time_grid=simulation_grid(config.simulation),
        )
    )
    writer.write_csv("design.csv", outcome.design.to_frame(outcome.evaluation.values))
    writer.write_csv("prcc.csv", outcome.prcc.to_frame())
    writer.write_csv("bias.csv", outcome.bias.histogram_frame())
    writer.write_json(
        "bias.json",
        {
            "output": section.output,
            "n_samples": outcome.bias.n_samples,
            "failures": outcome.evaluation.failures,
            "variance": outcome.bias.variance,
            "fractions": outcome.bias.fractions,
        },
    )
    if outcome.grid is not None:
        writer.write_csv("grid.csv", outcome.grid.to_frame())
        curves = [
            pd.DataFrame({"level": float(level), "x": points[:, 0], "y": points[:, 1]})
            for level, points in outcome.level_curves.items()
            if points.size
        ]
        frame = pd.concat(curves, ignore_index=True) if curves else pd.DataFrame(columns=["level", "x", "y"])
        writer.write_csv("level_curves.csv", frame.astype(np.float64))
