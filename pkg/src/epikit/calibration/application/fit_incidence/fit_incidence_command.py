from typing import Annotated, Dict, Optional, Tuple

from pydantic import Field

from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.calibration.domain.incidence_model import DEFAULT_STEPS_PER_WEEK
from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.calibration.domain.week_window import WeekWindow
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector
from epikit.shared import BaseValue
from epikit.shared.custom_types import NaturalNumber, PositiveInteger


class FitIncidenceCommand(BaseValue):
    """Fit free rates to weekly incidence and analyse its early growth."""

    data: IncidenceSeries
    initial_state: StateVector
    parameters: ParameterSet
    free: Annotated[Tuple[str, ...], Field(min_length=1, examples=[("beta1", "beta2")])]
    bounds: Annotated[Dict[str, Tuple[float, float]], Field(examples=[{"beta1": (1e-4, 0.1)}])]
    target: FitTargetEnum = FitTargetEnum.CUMULATIVE
    steps_per_week: PositiveInteger = DEFAULT_STEPS_PER_WEEK
    window: Optional[WeekWindow] = None
    degree: Optional[NaturalNumber] = None
    growth_scale: Annotated[
        Optional[float], Field(description="Multiplier of the regression slope; recruitment when omitted.")
    ] = None
