from typing import Annotated, Sequence, Tuple, Type, TypeVar

import numpy as np
from pydantic import Field

from epikit.shared import BaseValue

COMPARTMENTS: Tuple[str, ...] = ("S", "V", "E", "I", "R", "T")

CompartmentVectorT = TypeVar("CompartmentVectorT", bound="CompartmentVector")


class CompartmentVector(BaseValue):
    """Six values indexed by the SVEIRT compartments, in the order S, V, E, I, R, T."""

    susceptible: Annotated[float, Field(alias="S", allow_inf_nan=False)]
    vaccinated: Annotated[float, Field(alias="V", allow_inf_nan=False)]
    exposed: Annotated[float, Field(alias="E", allow_inf_nan=False)]
    infected: Annotated[float, Field(alias="I", allow_inf_nan=False)]
    recovered: Annotated[float, Field(alias="R", allow_inf_nan=False)]
    treated: Annotated[float, Field(alias="T", allow_inf_nan=False)]

    @classmethod
    def from_array(cls: Type[CompartmentVectorT], values: Sequence[float]) -> CompartmentVectorT:
        array = np.asarray(values, dtype=np.float64)
        if array.shape != (len(COMPARTMENTS),):
            raise ValueError(f"expected {len(COMPARTMENTS)} values, got shape {array.shape}")
        return cls.model_validate(dict(zip(COMPARTMENTS, array.tolist())))

    def to_array(self) -> np.ndarray:
        return np.array(
            [self.susceptible, self.vaccinated, self.exposed, self.infected, self.recovered, self.treated],
            dtype=np.float64,
        )

    def __repr__(self) -> str:
        values = ", ".join(f"{name}={value}" for name, value in zip(COMPARTMENTS, self.to_array().tolist()))
        return f"{type(self).__name__}({values})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompartmentVector) or type(self) is not type(other):
            return NotImplemented
        return bool(np.array_equal(self.to_array(), other.to_array()))

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(self.to_array().tolist())))
