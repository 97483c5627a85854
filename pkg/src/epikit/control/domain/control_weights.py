from typing import Annotated

from pydantic import Field

from epikit.control.domain.exceptions import ZeroEffortWeightException
from epikit.shared import BaseValue
from epikit.shared.custom_types import NonNegativeFloat


class ControlWeights(BaseValue):
    """Weights of the objective J = integral of a1 E + a2 I + a3 w1^2 + a4 w2^2 + a5 w3^2.

    Attributes:
        a1, a2: Cost per exposed / infected person-week.
        a3, a4, a5: Cost per unit squared effort of w1, w2, w3 per week.
    """

    a1: Annotated[NonNegativeFloat, Field(description="Weight of exposed persons.", examples=[20.0])] = 20.0
    a2: Annotated[NonNegativeFloat, Field(description="Weight of infected persons.", examples=[20.0])] = 20.0
    a3: Annotated[NonNegativeFloat, Field(description="Effort weight of w1.", examples=[45.0])] = 45.0
    a4: Annotated[NonNegativeFloat, Field(description="Effort weight of w2.", examples=[25.0])] = 25.0
    a5: Annotated[NonNegativeFloat, Field(description="Effort weight of w3.", examples=[50.0])] = 50.0

    @property
    def has_positive_effort_weights(self) -> bool:
        return self.a3 > 0.0 and self.a4 > 0.0 and self.a5 > 0.0

    def require_positive_effort_weights(self) -> None:
        """Guard the control law, whose second derivative in w_i is 2 a_j and must be positive."""
        if not self.has_positive_effort_weights:
            raise ZeroEffortWeightException(weights=self.model_dump())

    def __repr__(self) -> str:
        return f"ControlWeights(a1={self.a1}, a2={self.a2}, a3={self.a3}, a4={self.a4}, a5={self.a5})"
