from typing import Annotated

import numpy as np
from pydantic import Field, model_validator

from epikit.shared import BaseValue
from epikit.shared.custom_types import PositiveInteger


class TimeGrid(BaseValue):
    """Uniform grid of `n_steps + 1` nodes from `t0` to `tf`, in weeks."""

    t0: Annotated[float, Field(description="Start time in weeks.", examples=[0.0], allow_inf_nan=False)] = 0.0
    tf: Annotated[float, Field(description="End time in weeks.", examples=[12.0, 120.0], allow_inf_nan=False)]
    n_steps: Annotated[PositiveInteger, Field(description="Number of uniform steps.", examples=[120, 1200])]

    @model_validator(mode="after")
    def _check_order(self) -> "TimeGrid":
        if not self.tf > self.t0:
            raise ValueError("tf must be greater than t0")
        return self

    @classmethod
    def from_step(cls, t0: float, tf: float, step: float) -> "TimeGrid":
        """Build the grid whose uniform step is closest to `step`."""
        if not step > 0.0:
            raise ValueError("step must be positive")
        return cls(t0=t0, tf=tf, n_steps=max(1, int(round((tf - t0) / step))))

    @property
    def step(self) -> float:
        """h = (tf - t0) / n_steps."""
        return (self.tf - self.t0) / self.n_steps

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t0, self.tf, self.n_steps + 1)

    def __repr__(self) -> str:
        return f"TimeGrid(t0={self.t0}, tf={self.tf}, n_steps={self.n_steps})"
