import numpy as np
import pandas as pd

from epikit.calibration.application.fit_incidence import FitIncidenceCommand, FitIncidenceHandler
from epikit.calibration.domain.least_squares import observed_series
from epikit.config.domain.run_config import RunConfig
from epikit.config.infrastructure.config_loader import resolve_parameters
from epikit.presentation.cli.commands._shared import load_data, parse_window
from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter


def run(config: RunConfig, writer: ArtifactWriter) -> None:
    """Write `fit.json`, `residuals.csv` and, when a degree is set, `trend.csv`."""
    section = config.fit
    bundle = load_data(section.data)
    outcome = FitIncidenceHandler().handle(
        FitIncidenceCommand(
            data=bundle.series,
            initial_state=config.simulation.initial_state,
            parameters=resolve_parameters(config.model),
            free=section.free,
            bounds=section.bounds,
            target=section.target,
            steps_per_week=section.steps_per_week,
            window=parse_window(section.window),
            degree=section.degree,
            growth_scale=section.growth_scale,
        )
    )
    weeks = bundle.series.week_index
    observed = observed_series(bundle.series, outcome.fit.target)
    residuals = np.asarray(outcome.fit.residuals)
    writer.write_json("fit.json", {"source": bundle.source, **outcome.summary()})
    writer.write_csv(
        "residuals.csv",
        pd.DataFrame({"week": weeks, "observed": observed, "predicted": observed - residuals, "residual": residuals}),
    )
    if outcome.trend is not None:
        writer.write_csv(
            "trend.csv",
            pd.DataFrame(
                {
                    "week": weeks,
                    "observed": observed_series(bundle.series, outcome.trend.target),
                    "fitted": np.asarray(outcome.trend.fitted),
                }
            ),
        )
