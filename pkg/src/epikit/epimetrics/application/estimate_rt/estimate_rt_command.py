from typing import Annotated, Optional, Tuple

from pydantic import Field

from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.epimetrics.domain.generation_interval import GenerationInterval
from epikit.shared import BaseValue


class EstimateRtCommand(BaseValue):
    """Estimate R(t) from weekly incidence, optionally with a band over generation-interval rate ranges."""

    data: IncidenceSeries
    generation_interval: GenerationInterval
    b1_range: Optional[Tuple[float, float]] = None
    b2_range: Optional[Tuple[float, float]] = None
    resolution: Annotated[int, Field(ge=2, description="Grid points per rate range.")] = 5
