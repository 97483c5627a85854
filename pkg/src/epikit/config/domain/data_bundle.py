from typing import Annotated, Optional

from pydantic import Field

from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.shared import BaseValue
from epikit.shared.custom_types import ShortString


class DataBundle(BaseValue):
    """A loaded surveillance series with where it came from."""

    series: IncidenceSeries
    source: Annotated[str, Field(description="Path the series was read from.", examples=["data/weekly.csv"])]
    country: Annotated[Optional[ShortString], Field(description="Country tag, if known.", examples=["mexico"])] = None

    def __repr__(self) -> str:
        return f"DataBundle(source={self.source}, country={self.country}, series={self.series!r})"
