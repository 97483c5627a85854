from typing import Annotated

from pydantic import Field, model_validator

from epikit.shared import BaseValue
from epikit.shared.custom_types import NaturalNumber, NonNegativeFloat, ShortString


class TrajectoryReport(BaseValue):
    """Outcome of a trajectory-level validity check."""

    check: Annotated[ShortString, Field(description="Name of the check.", examples=["positivity"])]
    passed: bool
    worst_violation: Annotated[
        float,
        Field(description="Largest violation found; zero or negative when the property holds with margin."),
    ]
    tolerance: NonNegativeFloat
    location: Annotated[NaturalNumber, Field(description="Grid index of the worst violation.")]

    @model_validator(mode="after")
    def _check_consistency(self) -> "TrajectoryReport":
        if self.passed != (self.worst_violation <= self.tolerance):
            raise ValueError("passed must hold exactly when worst_violation <= tolerance")
        return self

    def __repr__(self) -> str:
        return (
            f"TrajectoryReport(check={self.check}, passed={self.passed}, "
            f"worst_violation={self.worst_violation}, tolerance={self.tolerance}, location={self.location})"
        )
