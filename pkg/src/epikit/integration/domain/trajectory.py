from typing import Any, Optional, Sequence

import numpy as np
import pandas as pd
from pydantic import field_validator, model_validator

from epikit.integration.domain.time_grid import TimeGrid
from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array


class Trajectory(BaseArrayValue):
    """Values of a vector quantity at every node of a time grid.

    Attributes:
        grid (TimeGrid): The grid the values live on.
        values (np.ndarray): Array of shape (n_steps + 1, n_components), read-only and finite.
    """

    grid: TimeGrid
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def _as_matrix(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=2)

    @model_validator(mode="after")
    def _check_shape(self) -> "Trajectory":
        if self.values.shape[0] != self.grid.n_steps + 1:
            raise ValueError(f"expected {self.grid.n_steps + 1} nodes, got {self.values.shape[0]}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("trajectory values must be finite")
        return self

    @property
    def times(self) -> np.ndarray:
        return self.grid.times

    @property
    def initial(self) -> np.ndarray:
        return self.values[0]

    @property
    def final(self) -> np.ndarray:
        return self.values[-1]

    def column(self, index: int) -> np.ndarray:
        return self.values[:, index]

    def population_totals(self, n_compartments: int = 6) -> np.ndarray:
        """N(t), the sum of the first `n_compartments` components at every node."""
        return self.values[:, :n_compartments].sum(axis=1)

    def to_frame(self, columns: Sequence[str], time_column: Optional[str] = "t") -> pd.DataFrame:
        """Tabulate the trajectory with one row per node."""
        frame = pd.DataFrame(np.asarray(self.values), columns=list(columns))
        if time_column is not None:
            frame.insert(0, time_column, self.times)
        return frame

    def __repr__(self) -> str:
        return f"Trajectory(grid={self.grid!r}, shape={self.values.shape})"
