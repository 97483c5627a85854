from typing import Annotated, Any, Tuple

import numpy as np
from pydantic import Field, field_validator, model_validator

from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.model.domain.parameter_set import ParameterSet
from epikit.shared import BaseArrayValue
from epikit.shared.base_array_value import as_readonly_array
from epikit.shared.custom_types import NaturalNumber, NonNegativeFloat

SSE_CONSISTENCY_TOLERANCE = 1e-12


class FitResult(BaseArrayValue):
    """Outcome of a least-squares fit.

    Attributes:
        parameters (ParameterSet): Best parameter set found.
        sse (float): Sum of squared residuals at `parameters`.
        residuals (np.ndarray): Observation minus model per data week.
        iterations (int): Simplex iterations.
        evaluations (int): Objective evaluations.
        converged (bool): Whether the simplex met its size tolerance before the evaluation cap.
        target (FitTargetEnum): Series view the fit compared.
        best_sse_history (Tuple[float, ...]): Best objective seen after each iteration, non-increasing.
        at_bound (Tuple[str, ...]): Free rates whose fitted value sits on a bound of the search box.
    """

    parameters: ParameterSet
    sse: NonNegativeFloat
    residuals: np.ndarray
    iterations: NaturalNumber
    evaluations: NaturalNumber
    converged: bool
    target: FitTargetEnum = FitTargetEnum.CUMULATIVE
    best_sse_history: Annotated[Tuple[float, ...], Field(default_factory=tuple)]
    at_bound: Annotated[Tuple[str, ...], Field(default_factory=tuple)]

    @field_validator("residuals", mode="before")
    @classmethod
    def _as_vector(cls, value: Any) -> np.ndarray:
        return as_readonly_array(value, ndim=1)

    @model_validator(mode="after")
    def _check_sse(self) -> "FitResult":
        total = float(np.sum(self.residuals**2))
        if abs(total - self.sse) > SSE_CONSISTENCY_TOLERANCE * max(total, self.sse, np.finfo(np.float64).tiny):
            raise ValueError("sse must equal the sum of squared residuals")
        return self

    def __repr__(self) -> str:
        return (
            f"FitResult(sse={self.sse}, iterations={self.iterations}, converged={self.converged}, "
            f"at_bound={self.at_bound}, parameters={self.parameters!r})"
        )

    @property
    def interior(self) -> bool:
        """Converged with every free rate strictly inside its bounds."""
        return self.converged and not self.at_bound
