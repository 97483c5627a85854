from typing import Annotated

from pydantic import Field

PositiveFloat = Annotated[
    float,
    Field(
        gt=0.0,
        allow_inf_nan=False,
    ),
]
