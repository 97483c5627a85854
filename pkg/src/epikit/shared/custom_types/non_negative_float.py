from typing import Annotated

from pydantic import Field

NonNegativeFloat = Annotated[
    float,
    Field(
        ge=0.0,
        allow_inf_nan=False,
    ),
]
