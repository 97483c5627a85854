from typing import Annotated, Tuple

import numpy as np
from pydantic import Field, ValidationError, model_validator

from epikit.model.domain.parameter_name_enum import ParameterNameEnum
from epikit.sensitivity.domain.exceptions import InvalidRangeException
from epikit.shared import BaseValue

UNIT_INTERVAL_NAMES = frozenset({ParameterNameEnum.EPSILON.value, ParameterNameEnum.VACCINE_INEFFICIENCY.value})


class ParameterRange(BaseValue):
    """Sampling interval [low, high] of one model rate."""

    name: Annotated[ParameterNameEnum, Field(description="Rate being varied.", examples=["beta1"])]
    low: Annotated[float, Field(allow_inf_nan=False, examples=[0.0025])]
    high: Annotated[float, Field(allow_inf_nan=False, examples=[0.0065])]

    @model_validator(mode="after")
    def _check_interval(self) -> "ParameterRange":
        if not self.low < self.high:
            raise ValueError("low must be below high")
        if self.low < 0.0:
            raise ValueError("rates cannot be negative")
        if self.name in UNIT_INTERVAL_NAMES and self.high > 1.0:
            raise ValueError(f"{self.name} must stay within [0, 1]")
        return self

    @classmethod
    def of(cls, name: str, low: float, high: float) -> "ParameterRange":
        """Validated constructor for user input.

        Raises:
            InvalidRangeException: If the name is unknown or the interval is invalid.
        """
        try:
            return cls(name=name, low=low, high=high)
        except ValidationError as error:
            raise InvalidRangeException(
                name=str(name),
                details={"low": low, "high": high, "errors": [err["msg"] for err in error.errors()]},
            ) from error

    @property
    def width(self) -> float:
        return self.high - self.low

    def strata(self, n: int) -> np.ndarray:
        """n + 1 equally spaced stratum edges."""
        return self.low + np.arange(n + 1) * (self.width / n)

    def __repr__(self) -> str:
        return f"ParameterRange(name={self.name}, low={self.low}, high={self.high})"


def _default(name: ParameterNameEnum, low: float, high: float) -> ParameterRange:
    return ParameterRange(name=name, low=low, high=high)


DEFAULT_RANGES: Tuple[ParameterRange, ...] = (
    _default(ParameterNameEnum.LAMBDA, 400.0, 600.0),
    _default(ParameterNameEnum.BETA1, 0.0025, 0.0065),
    _default(ParameterNameEnum.BETA2, 0.0025, 0.0065),
    _default(ParameterNameEnum.ALPHA, 0.35, 0.85),
    _default(ParameterNameEnum.GAMMA, 0.45, 0.75),
    _default(ParameterNameEnum.GAMMA1, 0.15, 0.45),
    _default(ParameterNameEnum.MU, 0.02, 0.06),
    _default(ParameterNameEnum.DELTA, 0.03, 0.045),
    _default(ParameterNameEnum.VACCINE_INEFFICIENCY, 0.3, 0.85),
)
