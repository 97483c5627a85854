from typing import Annotated

from pydantic import Field

from epikit.model.domain.parameter_set import ParameterSet
from epikit.shared import BaseValue
from epikit.shared.constants.tolerance_constants import EQUAL_RATES_TOLERANCE
from epikit.shared.custom_types import PositiveFloat


class GenerationInterval(BaseValue):
    """Two-stage generation interval: an exponential stay in E followed by one in I.

    Attributes:
        b1 (float): Exit rate from E, alpha + mu, per week.
        b2 (float): Exit rate from I, mu + delta + gamma + gamma1, per week.
    """

    b1: Annotated[PositiveFloat, Field(description="Exit rate from E, per week.", examples=[0.8])]
    b2: Annotated[PositiveFloat, Field(description="Exit rate from I, per week.", examples=[1.25])]

    @classmethod
    def from_parameters(cls, p: ParameterSet) -> "GenerationInterval":
        return cls(b1=p.exposed_exit_rate, b2=p.infected_exit_rate)

    @property
    def mean(self) -> float:
        """1/b1 + 1/b2 weeks."""
        return 1.0 / self.b1 + 1.0 / self.b2

    @property
    def has_equal_rates(self) -> bool:
        """Whether b1 and b2 agree to within the relative tolerance, switching to the limit (Erlang) form."""
        return abs(self.b1 - self.b2) <= EQUAL_RATES_TOLERANCE * max(self.b1, self.b2)

    def __repr__(self) -> str:
        return f"GenerationInterval(b1={self.b1}, b2={self.b2})"
