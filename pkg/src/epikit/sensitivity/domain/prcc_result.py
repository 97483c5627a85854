from typing import Any, Tuple

import numpy as np
import pandas as pd
from pydantic import field_validator, model_validator

from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array
from epikit.shared.constants.tolerance_constants import PRCC_SIGNIFICANCE_LEVEL, PRCC_SIGNIFICANCE_THRESHOLD
from epikit.shared.custom_types import NaturalNumber


class PrccResult(BaseArrayValue):
    """Partial rank correlation of each parameter with the output.

    A coefficient is significant when |prcc| > 0.5 and its p-value is below 0.05.

    Attributes:
        parameters (Tuple[str, ...]): Parameter names in design order.
        prcc (np.ndarray): Coefficients in [-1, 1].
        p_value (np.ndarray): Two-sided p-values in [0, 1].
        n_samples (int): Rows used.
        excluded (int): Rows dropped because the output was missing.
    """

    parameters: Tuple[str, ...]
    prcc: np.ndarray
    p_value: np.ndarray
    n_samples: NaturalNumber
    excluded: NaturalNumber = 0

    @field_validator("prcc", "p_value", mode="before")
    @classmethod
    def _as_vector(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    @model_validator(mode="after")
    def _check_bounds(self) -> "PrccResult":
        if not self.prcc.size == self.p_value.size == len(self.parameters):
            raise ValueError("one coefficient and one p-value per parameter are required")
        if np.any(np.abs(self.prcc) > 1.0) or np.any((self.p_value < 0.0) | (self.p_value > 1.0)):
            raise ValueError("prcc must lie in [-1, 1] and p-values in [0, 1]")
        return self

    @property
    def significant(self) -> np.ndarray:
        return (np.abs(self.prcc) > PRCC_SIGNIFICANCE_THRESHOLD) & (self.p_value < PRCC_SIGNIFICANCE_LEVEL)

    def coefficient(self, name: str) -> float:
        return float(self.prcc[self.parameters.index(str(name))])

    def p_value_of(self, name: str) -> float:
        return float(self.p_value[self.parameters.index(str(name))])

    def to_frame(self) -> pd.DataFrame:
        """Columns parameter, prcc, p_value, significant (0/1)."""
        return pd.DataFrame(
            {
                "parameter": list(self.parameters),
                "prcc": np.asarray(self.prcc),
                "p_value": np.asarray(self.p_value),
                "significant": self.significant.astype(np.int64),
            }
        )
