from typing import Any, Sequence

import numpy as np
import pandas as pd
from pydantic import field_validator, model_validator

from epikit.integration.domain.grid_interpolation import interpolate_on_grid
from epikit.integration.domain.time_grid import TimeGrid
from epikit.model.domain.control_vector import ControlVector
from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array

CONTROL_NAMES = ("w1", "w2", "w3")


class ControlSchedule(BaseArrayValue):
    """Node values of (w1, w2, w3) on a time grid, each in [0, 1]; linear in between."""

    grid: TimeGrid
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def _as_matrix(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=2)

    @model_validator(mode="after")
    def _check_shape_and_box(self) -> "ControlSchedule":
        if self.values.shape != (self.grid.n_steps + 1, len(CONTROL_NAMES)):
            raise ValueError(f"expected shape {(self.grid.n_steps + 1, len(CONTROL_NAMES))}, got {self.values.shape}")
        if not (np.all(self.values >= 0.0) and np.all(self.values <= 1.0)):
            raise ValueError("control values must lie in [0, 1]")
        return self

    @classmethod
    def constant(cls, grid: TimeGrid, w: ControlVector) -> "ControlSchedule":
        return cls(grid=grid, values=np.tile(w.to_array(), (grid.n_steps + 1, 1)))

    @classmethod
    def zeros(cls, grid: TimeGrid) -> "ControlSchedule":
        return cls.constant(grid, ControlVector())

    def at(self, t: float) -> np.ndarray:
        return interpolate_on_grid(self.grid, self.values, t)

    def node(self, index: int) -> ControlVector:
        return ControlVector.from_array(self.values[index])

    def to_frame(self, columns: Sequence[str] = CONTROL_NAMES) -> pd.DataFrame:
        frame = pd.DataFrame(np.asarray(self.values), columns=list(columns))
        frame.insert(0, "t", self.grid.times)
        return frame

    def __repr__(self) -> str:
        return f"ControlSchedule(grid={self.grid!r}, mean={np.asarray(self.values).mean(axis=0).tolist()})"
