from typing import Annotated, Sequence

import numpy as np
from pydantic import Field

from epikit.shared import BaseValue

ADJOINT_NAMES = ("psiS", "psiV", "psiE", "psiI", "psiR", "psiT")


class AdjointVector(BaseValue):
    """Costates of the six compartments, in cost per person."""

    psi_s: Annotated[float, Field(alias="psiS", allow_inf_nan=False)] = 0.0
    psi_v: Annotated[float, Field(alias="psiV", allow_inf_nan=False)] = 0.0
    psi_e: Annotated[float, Field(alias="psiE", allow_inf_nan=False)] = 0.0
    psi_i: Annotated[float, Field(alias="psiI", allow_inf_nan=False)] = 0.0
    psi_r: Annotated[float, Field(alias="psiR", allow_inf_nan=False)] = 0.0
    psi_t: Annotated[float, Field(alias="psiT", allow_inf_nan=False)] = 0.0

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "AdjointVector":
        array = np.asarray(values, dtype=np.float64)
        if array.shape != (len(ADJOINT_NAMES),):
            raise ValueError(f"expected {len(ADJOINT_NAMES)} values, got shape {array.shape}")
        return cls.model_validate(dict(zip(ADJOINT_NAMES, array.tolist())))

    def to_array(self) -> np.ndarray:
        return np.array([self.psi_s, self.psi_v, self.psi_e, self.psi_i, self.psi_r, self.psi_t], dtype=np.float64)
