from typing import Optional

from pydantic import ValidationError

from epikit.calibration.domain.week_window import WeekWindow
from epikit.config.domain.data_bundle import DataBundle
from epikit.config.domain.exceptions import ConfigurationException
from epikit.config.domain.run_config import SimulationSection
from epikit.config.infrastructure.incidence_csv import load_incidence_csv, load_sample_bundle
from epikit.integration.domain.time_grid import TimeGrid


def load_data(path: Optional[object]) -> DataBundle:
    """The configured incidence file, or the bundled sample when none is set."""
    return load_sample_bundle() if path is None else load_incidence_csv(str(path))


def simulation_grid(section: SimulationSection) -> TimeGrid:
    return TimeGrid.from_step(section.t0, section.t0 + section.weeks, section.step)


def parse_window(text: Optional[str]) -> Optional[WeekWindow]:
    if text is None:
        return None
    try:
        return WeekWindow.parse(text)
    except (ValueError, ValidationError) as error:
        raise ConfigurationException(
            "The week window must read a:b.", source="fit.window", details={"value": text}
        ) from error
