from typing import Annotated, Optional, Tuple

from pydantic import Field

from epikit.integration.domain.time_grid import TimeGrid
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector
from epikit.sensitivity.domain.parameter_range import DEFAULT_RANGES, ParameterRange
from epikit.sensitivity.domain.sensitivity_output_enum import SensitivityOutputEnum
from epikit.shared import BaseValue
from epikit.shared.custom_types import PositiveInteger


class RunSensitivityCommand(BaseValue):
    """Draw a Latin hypercube, evaluate the output on it, and summarise it with PRCC, bias and a level grid."""

    parameters: ParameterSet
    ranges: Annotated[Tuple[ParameterRange, ...], Field(default=DEFAULT_RANGES, min_length=1)]
    n_samples: PositiveInteger = 100
    seed: Optional[int] = None
    output: SensitivityOutputEnum = SensitivityOutputEnum.R0
    intervals: Tuple[Tuple[float, float], ...] = ((1.0, 2.0), (2.0, 3.0))
    bins: PositiveInteger = 10
    grid_x: Optional[ParameterRange] = None
    grid_y: Optional[ParameterRange] = None
    grid_resolution: Annotated[int, Field(ge=2)] = 50
    levels: Tuple[float, ...] = (1.5, 2.5, 3.5)
    max_workers: Optional[PositiveInteger] = None
    initial_state: Optional[StateVector] = None
    time_grid: Optional[TimeGrid] = None
