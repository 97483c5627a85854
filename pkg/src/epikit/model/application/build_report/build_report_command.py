from typing import Annotated, Optional

from pydantic import Field

from epikit.model.domain.parameter_set import ParameterSet
from epikit.shared import BaseValue
from epikit.shared.custom_types import PositiveFloat, ShortString


class BuildReportCommand(BaseValue):
    """Summarise the threshold quantities of one parameter set."""

    parameters: ParameterSet
    name: Annotated[Optional[ShortString], Field(description="Preset or file the parameters came from.")] = None
    population: Annotated[
        Optional[PositiveFloat],
        Field(description="Population N for the controlled R0; Lambda / mu when omitted."),
    ] = None
