from typing import Any

import numpy as np
import pandas as pd
from pydantic import field_validator, model_validator

from epikit.sensitivity.domain.parameter_range import ParameterRange
from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array


class R0Grid(BaseArrayValue):
    """R0 over a rectangle of two rates, for contour plots.

    Attributes:
        x_range, y_range (ParameterRange): The varied rates.
        x_values, y_values (np.ndarray): Grid coordinates.
        values (np.ndarray): R0 with shape (len(y_values), len(x_values)); NaN where it is undefined.
        x_slope_sign, y_slope_sign (int): Sign of dR0/dx and dR0/dy at the centre, by central difference.
    """

    x_range: ParameterRange
    y_range: ParameterRange
    x_values: np.ndarray
    y_values: np.ndarray
    values: np.ndarray
    x_slope_sign: int
    y_slope_sign: int

    @field_validator("x_values", "y_values", mode="before")
    @classmethod
    def _as_axis(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    @field_validator("values", mode="before")
    @classmethod
    def _as_matrix(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=2)

    @model_validator(mode="after")
    def _check_shape(self) -> "R0Grid":
        if self.values.shape != (self.y_values.size, self.x_values.size):
            raise ValueError("values must have shape (len(y_values), len(x_values))")
        return self

    def to_frame(self) -> pd.DataFrame:
        """Columns x, y, r0; x varies fastest."""
        xs, ys = np.meshgrid(self.x_values, self.y_values)
        return pd.DataFrame({"x": xs.ravel(), "y": ys.ravel(), "r0": np.asarray(self.values).ravel()})

    def __repr__(self) -> str:
        return f"R0Grid(x={self.x_range.name}, y={self.y_range.name}, shape={self.values.shape})"
