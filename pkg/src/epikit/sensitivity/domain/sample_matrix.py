from typing import Any, Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import field_validator, model_validator

from epikit.sensitivity.domain.parameter_range import ParameterRange
from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array


class SampleMatrix(BaseArrayValue):
    """A design of `n_samples` rows over the parameters of `ranges`, one column each, in range order.

    Attributes:
        ranges (Tuple[ParameterRange, ...]): Column definitions.
        values (np.ndarray): Array of shape (n_samples, n_parameters).
        seed (Optional[int]): Seed the design was drawn with.
    """

    ranges: Tuple[ParameterRange, ...]
    values: np.ndarray
    seed: Optional[int] = None

    @field_validator("values", mode="before")
    @classmethod
    def _as_matrix(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=2)

    @model_validator(mode="after")
    def _check_columns(self) -> "SampleMatrix":
        if self.values.shape[1] != len(self.ranges):
            raise ValueError("one column per range is required")
        if len({item.name for item in self.ranges}) != len(self.ranges):
            raise ValueError("parameter names must be unique")
        return self

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(str(item.name) for item in self.ranges)

    @property
    def n_samples(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_parameters(self) -> int:
        return int(self.values.shape[1])

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.names.index(str(name))]

    def row(self, index: int) -> dict:
        return dict(zip(self.names, (float(value) for value in self.values[index])))

    def is_stratified(self) -> bool:
        """Whether every column has exactly one sample in each of its n equal strata."""
        n = self.n_samples
        for index, item in enumerate(self.ranges):
            position = np.floor((self.values[:, index] - item.low) / item.width * n).astype(np.int64)
            position = np.clip(position, 0, n - 1)
            if np.any(self.values[:, index] < item.low) or np.any(self.values[:, index] > item.high):
                return False
            if np.unique(position).size != n:
                return False
        return True

    def to_frame(self, output: Optional[np.ndarray] = None) -> pd.DataFrame:
        frame = pd.DataFrame(np.asarray(self.values), columns=list(self.names))
        if output is not None:
            frame["output"] = np.asarray(output)
        return frame

    def __repr__(self) -> str:
        return f"SampleMatrix(names={self.names}, n_samples={self.n_samples}, seed={self.seed})"
