from typing import Annotated

from pydantic import Field

from epikit.model.domain.parameter_set import ParameterSet
from epikit.shared import BaseValue
from epikit.shared.custom_types import ShortString


class CountryPreset(BaseValue):
    """A named parameter set estimated for one country."""

    name: Annotated[
        ShortString,
        Field(description="Preset identifier.", examples=["mexico", "italy", "south_africa"]),
    ]
    parameters: ParameterSet

    def __repr__(self) -> str:
        return f"CountryPreset(name={self.name}, parameters={self.parameters!r})"
