from typing import Annotated

from pydantic import Field

from epikit.model.domain.compartment_vector import CompartmentVector
from epikit.shared.custom_types import NonNegativeFloat


class StateVector(CompartmentVector):
    """Population of each compartment, in persons. Every component is non-negative."""

    susceptible: Annotated[NonNegativeFloat, Field(alias="S", description="Susceptible persons.", examples=[500.0])]
    vaccinated: Annotated[NonNegativeFloat, Field(alias="V", description="Vaccinated persons.", examples=[1.0])]
    exposed: Annotated[NonNegativeFloat, Field(alias="E", description="Exposed persons.", examples=[1.0])]
    infected: Annotated[NonNegativeFloat, Field(alias="I", description="Infected persons.", examples=[0.0])]
    recovered: Annotated[NonNegativeFloat, Field(alias="R", description="Recovered persons.", examples=[0.0])]
    treated: Annotated[NonNegativeFloat, Field(alias="T", description="Treated persons.", examples=[0.0])]

    @property
    def total(self) -> float:
        """N = S + V + E + I + R + T."""
        return float(self.to_array().sum())
