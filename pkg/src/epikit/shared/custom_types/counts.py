from typing import Annotated

from pydantic import Field

# Iteration, evaluation and week counts, and polynomial degrees. Zero is valid for each.
NaturalNumber = Annotated[int, Field(ge=0)]

# Sizes that must hold at least one element: samples, bins and steps per week.
PositiveInteger = Annotated[int, Field(gt=0)]
