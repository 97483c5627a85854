"""A dimensionless fraction in [0, 1], e.g. vaccine efficacy or a control intensity.

45% is represented as 0.45.
"""

from typing import Annotated

from pydantic import Field

UnitInterval = Annotated[
    float,
    Field(
        ge=0.0,
        le=1.0,
        allow_inf_nan=False,
    ),
]
