from typing import Annotated

import numpy as np
from pydantic import Field, model_validator

from epikit.shared import BaseValue


class WeekWindow(BaseValue):
    """Inclusive range of week indices, written `start:stop` on the command line."""

    start: Annotated[int, Field(description="First week of the window.", examples=[20])]
    stop: Annotated[int, Field(description="Last week of the window, included.", examples=[40])]

    @model_validator(mode="after")
    def _check_order(self) -> "WeekWindow":
        if self.stop < self.start:
            raise ValueError("stop must not precede start")
        return self

    @classmethod
    def parse(cls, text: str) -> "WeekWindow":
        """Read `a:b`."""
        start, separator, stop = text.partition(":")
        if not separator:
            raise ValueError(f"expected a window like 20:40, got {text!r}")
        return cls(start=int(start), stop=int(stop))

    def mask(self, weeks: np.ndarray) -> np.ndarray:
        return (weeks >= self.start) & (weeks <= self.stop)

    def __str__(self) -> str:
        return f"{self.start}:{self.stop}"
