from typing import Any, Optional

import numpy as np
import pandas as pd
from pydantic import field_validator, model_validator

from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array


def _as_weeks(value: Any) -> np.ndarray:
    weeks = np.array(value, dtype=np.int64)
    if weeks.ndim != 1:
        raise ValueError("week_index must be one-dimensional")
    weeks.setflags(write=False)
    return weeks


def _as_flags(value: Any) -> np.ndarray:
    flags = np.array(value, dtype=bool)
    if flags.ndim != 1:
        raise ValueError("defined must be one-dimensional")
    flags.setflags(write=False)
    return flags


class RtSeries(BaseArrayValue):
    """Effective reproduction number per week.

    Attributes:
        week_index (np.ndarray): Weeks of the incidence series.
        rt (np.ndarray): R(t) where defined, NaN elsewhere.
        defined (np.ndarray): Whether the renewal denominator was positive that week.
    """

    week_index: np.ndarray
    rt: np.ndarray
    defined: np.ndarray

    @field_validator("week_index", mode="before")
    @classmethod
    def _weeks(cls, value: Any) -> np.ndarray:
        return _as_weeks(value)

    @field_validator("defined", mode="before")
    @classmethod
    def _flags(cls, value: Any) -> np.ndarray:
        return _as_flags(value)

    @field_validator("rt", mode="before")
    @classmethod
    def _as_values(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    @model_validator(mode="after")
    def _check_consistency(self) -> "RtSeries":
        if not self.week_index.size == self.rt.size == self.defined.size:
            raise ValueError("week_index, rt and defined differ in length")
        if not np.all(np.isfinite(self.rt[self.defined])):
            raise ValueError("rt must be finite wherever it is defined")
        return self

    @property
    def defined_from(self) -> Optional[int]:
        """First week with a positive denominator, or None."""
        hits = np.flatnonzero(self.defined)
        return int(self.week_index[hits[0]]) if hits.size else None

    def to_frame(self) -> pd.DataFrame:
        """Columns week, rt, defined (0/1); rt is empty where undefined."""
        return pd.DataFrame(
            {
                "week": self.week_index,
                "rt": np.where(self.defined, self.rt, np.nan),
                "defined": self.defined.astype(np.int64),
            }
        )

    def __repr__(self) -> str:
        return f"RtSeries(weeks={self.week_index.size}, defined_from={self.defined_from})"


class RtEnvelope(BaseArrayValue):
    """Point-wise minimum and maximum of R(t) over a grid of generation-interval rates."""

    week_index: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    defined: np.ndarray
    combinations: int

    @field_validator("week_index", mode="before")
    @classmethod
    def _weeks(cls, value: Any) -> np.ndarray:
        return _as_weeks(value)

    @field_validator("defined", mode="before")
    @classmethod
    def _flags(cls, value: Any) -> np.ndarray:
        return _as_flags(value)

    @field_validator("lower", "upper", mode="before")
    @classmethod
    def _as_values(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    @model_validator(mode="after")
    def _check_order(self) -> "RtEnvelope":
        if not np.all(self.lower[self.defined] <= self.upper[self.defined]):
            raise ValueError("lower must not exceed upper")
        return self

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "week": self.week_index,
                "rt_lower": np.where(self.defined, self.lower, np.nan),
                "rt_upper": np.where(self.defined, self.upper, np.nan),
                "defined": self.defined.astype(np.int64),
            }
        )
