from typing import Annotated, Any, Sequence

import numpy as np
from pydantic import Field, field_validator

from epikit.shared import BaseValue
from epikit.shared.custom_types import UnitInterval


class ControlVector(BaseValue):
    """Intensities of the three interventions at one instant. Values are clamped into [0, 1] on construction.

    Attributes:
        w1 (float): Contact-reduction effort, scales infection by (1 - w1).
        w2 (float): Treatment effort, scales treatment by (1 + w2).
        w3 (float): Recovery-support effort, scales recovery by (1 + w3).
    """

    w1: Annotated[UnitInterval, Field(description="Contact reduction.", examples=[0.45])] = 0.0
    w2: Annotated[UnitInterval, Field(description="Treatment effort.", examples=[0.45])] = 0.0
    w3: Annotated[UnitInterval, Field(description="Recovery support.", examples=[0.45])] = 0.0

    @field_validator("w1", "w2", "w3", mode="before")
    @classmethod
    def _clamp(cls, value: Any) -> float:
        try:
            number = float(value)
        except (TypeError, ValueError) as error:
            raise ValueError("control intensity must be a number") from error
        if np.isnan(number):
            raise ValueError("control intensity must be a number")
        return float(np.clip(number, 0.0, 1.0))

    @classmethod
    def constant(cls, level: float) -> "ControlVector":
        return cls(w1=level, w2=level, w3=level)

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "ControlVector":
        w1, w2, w3 = (float(value) for value in values)
        return cls(w1=w1, w2=w2, w3=w3)

    def to_array(self) -> np.ndarray:
        return np.array([self.w1, self.w2, self.w3], dtype=np.float64)

    def __repr__(self) -> str:
        return f"ControlVector(w1={self.w1}, w2={self.w2}, w3={self.w3})"
