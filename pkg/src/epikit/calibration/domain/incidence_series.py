from typing import Any, Sequence

import numpy as np
import pandas as pd
from pydantic import ValidationError, field_validator, model_validator

from epikit.calibration.domain.exceptions import InsufficientDataException, InvalidIncidenceSeriesException
from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array

MINIMUM_FIT_WEEKS = 2


class IncidenceSeries(BaseArrayValue):
    """Weekly new cases over consecutive weeks.

    A single week is a valid series; fits and regressions call `require_weeks` for the length they need.

    Attributes:
        week_index (np.ndarray): Integer weeks, increasing by exactly one.
        new_cases (np.ndarray): Non-negative new cases per week.
    """

    week_index: np.ndarray
    new_cases: np.ndarray

    @field_validator("week_index", mode="before")
    @classmethod
    def _as_weeks(cls, value: Any) -> np.ndarray:
        weeks = np.array(value)
        if weeks.ndim != 1:
            raise ValueError("week_index must be one-dimensional")
        if weeks.size and not np.all(np.equal(np.mod(weeks, 1), 0)):
            raise ValueError("week_index must hold integers")
        weeks = weeks.astype(np.int64)
        weeks.setflags(write=False)
        return weeks

    @field_validator("new_cases", mode="before")
    @classmethod
    def _as_counts(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    @model_validator(mode="after")
    def _check_series(self) -> "IncidenceSeries":
        if self.new_cases.size == 0:
            raise ValueError("the series needs at least one week")
        if self.week_index.size != self.new_cases.size:
            raise ValueError("week_index and new_cases differ in length")
        if not np.all(np.diff(self.week_index) == 1):
            raise ValueError("weeks must increase by exactly one")
        if not np.all(np.isfinite(self.new_cases)) or np.any(self.new_cases < 0.0):
            raise ValueError("new_cases must be finite and non-negative")
        return self

    @classmethod
    def from_counts(cls, new_cases: Sequence[float], start_week: int = 0) -> "IncidenceSeries":
        """Build a series starting at `start_week`.

        Raises:
            InvalidIncidenceSeriesException: If the counts are not a valid series.
        """
        try:
            return cls(week_index=np.arange(start_week, start_week + len(new_cases)), new_cases=new_cases)
        except ValidationError as error:
            raise InvalidIncidenceSeriesException(errors=[err["msg"] for err in error.errors()]) from error

    @property
    def size(self) -> int:
        return int(self.new_cases.size)

    def require_weeks(self, minimum: int, operation: str) -> None:
        """Raise `InsufficientDataException` when the series holds fewer than `minimum` weeks."""
        if self.size < minimum:
            raise InsufficientDataException(operation=operation, weeks=self.size, minimum=minimum)

    @property
    def cumulative_cases(self) -> np.ndarray:
        """Running total of new cases, the observed cumulative series."""
        return np.cumsum(self.new_cases)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"week": self.week_index, "new_cases": np.asarray(self.new_cases)})

    def __repr__(self) -> str:
        first, last = int(self.week_index[0]), int(self.week_index[-1])
        return f"IncidenceSeries(weeks={first}..{last}, total={self.new_cases.sum()})"
