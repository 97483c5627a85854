from typing import Any, Dict, Tuple

import numpy as np
import pandas as pd
from pydantic import field_validator, model_validator

from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array
from epikit.shared.custom_types import NaturalNumber, NonNegativeFloat


class BiasReport(BaseArrayValue):
    """Spread of sampled R0 values: a histogram, the share inside each queried interval, and the variance.

    Attributes:
        bin_edges (np.ndarray): Histogram edges, one more than the bins.
        bin_counts (np.ndarray): Samples per bin; they add up to `n_samples`.
        fractions (Dict[str, float]): Share of samples in each closed interval, keyed `lo:hi`.
        variance (float): Sample variance (divisor n - 1; zero for a single sample).
        n_samples (int): Samples used.
    """

    bin_edges: np.ndarray
    bin_counts: np.ndarray
    fractions: Dict[str, float]
    variance: NonNegativeFloat
    n_samples: NaturalNumber

    @field_validator("bin_edges", "bin_counts", mode="before")
    @classmethod
    def _as_vector(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    @model_validator(mode="after")
    def _check_counts(self) -> "BiasReport":
        if int(self.bin_counts.sum()) != self.n_samples:
            raise ValueError("bin counts must add up to the sample count")
        if any(not 0.0 <= value <= 1.0 for value in self.fractions.values()):
            raise ValueError("fractions must lie in [0, 1]")
        return self

    def fraction(self, interval: Tuple[float, float]) -> float:
        return self.fractions[interval_key(interval)]

    def histogram_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "bin_low": np.asarray(self.bin_edges[:-1]),
                "bin_high": np.asarray(self.bin_edges[1:]),
                "count": self.bin_counts.astype(np.int64),
            }
        )


def interval_key(interval: Tuple[float, float]) -> str:
    low, high = interval
    return f"{float(low)!r}:{float(high)!r}"
