from typing import Annotated, Literal

from pydantic import Field

from epikit.shared import BaseValue


class ExponentialPhaseR0(BaseValue):
    """Reproduction number from the early-growth closed form.

    The closed form mixes the recruitment rate with the regression growth rate and is evaluated as printed,
    so `formula_caveat` is always set and the value should not be read as a calibrated estimate.
    """

    value: float
    growth_value: Annotated[
        float, Field(description="Growth rate times scale, substituted for every Lambda.", examples=[10.0])
    ]
    formula_caveat: Literal[True] = True
