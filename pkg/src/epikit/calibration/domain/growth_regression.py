from typing import Annotated

from pydantic import Field

from epikit.calibration.domain.week_window import WeekWindow
from epikit.shared import BaseValue
from epikit.shared.custom_types import NaturalNumber, UnitInterval


class GrowthRegression(BaseValue):
    """Least-squares line of weekly new cases against cumulative cases.

    Attributes:
        slope (float): Growth rate per week.
        intercept (float): New cases at zero cumulative cases.
        r_squared (float): Coefficient of determination.
        window (WeekWindow): Weeks the line was fitted on.
        points (int): Number of weeks used.
    """

    slope: Annotated[float, Field(description="Growth rate per week.", examples=[0.02])]
    intercept: float
    r_squared: UnitInterval
    window: WeekWindow
    points: NaturalNumber

    def __repr__(self) -> str:
        return f"GrowthRegression(slope={self.slope}, intercept={self.intercept}, r_squared={self.r_squared})"
