from typing import Annotated

from pydantic import Field

from epikit.shared import BaseValue
from epikit.shared.custom_types import PositiveFloat, PositiveInteger


class SweepSettings(BaseValue):
    """Iteration controls of the forward-backward sweep."""

    max_iterations: Annotated[PositiveInteger, Field(description="Iteration cap.", examples=[200])] = 200
    convergence_tol: Annotated[
        PositiveFloat, Field(description="Relative change below which the sweep stops.", examples=[1e-3])
    ] = 1e-3
    relaxation: Annotated[
        float,
        Field(gt=0.0, le=1.0, description="Weight of the new control candidate.", examples=[0.5]),
    ] = 0.5
