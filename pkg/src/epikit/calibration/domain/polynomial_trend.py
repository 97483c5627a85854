from typing import Any

import numpy as np
from pydantic import field_validator

from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array
from epikit.shared.custom_types import NaturalNumber


class PolynomialTrend(BaseArrayValue):
    """Least-squares polynomial in the week index.

    Attributes:
        degree (int): Polynomial degree.
        coefficients (np.ndarray): Ascending powers of the week index.
        fitted (np.ndarray): Polynomial evaluated at each data week.
        residuals (np.ndarray): Observation minus fitted value.
        r_squared (float): Coefficient of determination; 1 for a constant series fitted exactly.
        target (FitTargetEnum): Series view that was fitted.
    """

    degree: NaturalNumber
    coefficients: np.ndarray
    fitted: np.ndarray
    residuals: np.ndarray
    r_squared: float
    target: FitTargetEnum

    @field_validator("coefficients", "fitted", "residuals", mode="before")
    @classmethod
    def _as_vector(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    def __repr__(self) -> str:
        return f"PolynomialTrend(degree={self.degree}, target={self.target}, r_squared={self.r_squared})"
