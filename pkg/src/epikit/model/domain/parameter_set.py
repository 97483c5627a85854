from typing import Annotated, Any, Dict, Mapping, Union

from pydantic import Field

from epikit.model.domain.parameter_name_enum import ParameterNameEnum
from epikit.shared import BaseValue
from epikit.shared.custom_types import NonNegativeFloat, UnitInterval


class ParameterSet(BaseValue):
    """All rates of the SVEIRT model. Time is measured in weeks.

    Fields are addressed by descriptive names in code and by the model symbols (`Lambda`, `beta1`, ...)
    in preset files. Every rate is non-negative; operations that divide by `mu` check it themselves
    and raise `DegenerateParameterException` when it vanishes.
    """

    recruitment: Annotated[
        NonNegativeFloat,
        Field(alias="Lambda", description="Recruitment into S, persons per week.", examples=[500.0]),
    ]
    contact_exposed: Annotated[
        NonNegativeFloat,
        Field(alias="beta1", description="Transmission from E-S contact, per person per week.", examples=[0.0055]),
    ]
    contact_infected: Annotated[
        NonNegativeFloat,
        Field(alias="beta2", description="Transmission from I-S contact, per person per week.", examples=[0.0055]),
    ]
    vaccination_rate: Annotated[
        NonNegativeFloat,
        Field(alias="phi", description="Vaccination rate S -> V, per week.", examples=[0.1]),
    ]
    progression: Annotated[
        NonNegativeFloat,
        Field(alias="alpha", description="Progression E -> I, per week.", examples=[0.75]),
    ]
    recovery: Annotated[
        NonNegativeFloat,
        Field(alias="gamma", description="Recovery I -> R, per week.", examples=[0.65]),
    ]
    treatment: Annotated[
        NonNegativeFloat,
        Field(alias="gamma1", description="Treatment I -> T, per week.", examples=[0.25]),
    ]
    natural_death: Annotated[
        NonNegativeFloat,
        Field(alias="mu", description="Natural death rate, per week.", examples=[0.05]),
    ]
    disease_death: Annotated[
        NonNegativeFloat,
        Field(alias="delta", description="Disease-induced death rate, per week.", examples=[0.3]),
    ]
    vaccine_efficacy: Annotated[
        UnitInterval,
        Field(alias="epsilon", description="Vaccine efficacy, dimensionless.", examples=[0.45]),
    ]

    @property
    def vaccine_inefficiency(self) -> float:
        """lambda = 1 - epsilon, the relative susceptibility of vaccinated people."""
        return 1.0 - self.vaccine_efficacy

    @property
    def exposed_exit_rate(self) -> float:
        """a1 = alpha + mu."""
        return self.progression + self.natural_death

    @property
    def infected_exit_rate(self) -> float:
        """b2 = mu + delta + gamma + gamma1."""
        return self.natural_death + self.disease_death + self.recovery + self.treatment

    def value_of(self, name: Union[ParameterNameEnum, str]) -> float:
        key = ParameterNameEnum(name)
        if key is ParameterNameEnum.VACCINE_INEFFICIENCY:
            return self.vaccine_inefficiency
        return float(self.to_symbols()[key.value])

    def with_overrides(self, values: Mapping[Union[ParameterNameEnum, str], float]) -> "ParameterSet":
        """Return a validated copy with some rates replaced.

        Args:
            values: Rates keyed by `ParameterNameEnum` or its string value.
                Setting `lambda` sets epsilon = 1 - lambda.

        Returns:
            ParameterSet: The new parameter set.
        """
        symbols: Dict[str, Any] = self.to_symbols()
        for name, value in values.items():
            key = ParameterNameEnum(name)
            if key is ParameterNameEnum.VACCINE_INEFFICIENCY:
                symbols[ParameterNameEnum.EPSILON.value] = 1.0 - float(value)
            else:
                symbols[key.value] = float(value)
        return ParameterSet.model_validate(symbols)

    def to_symbols(self) -> Dict[str, float]:
        """Dump the rates keyed by their model symbols, in preset-file order."""
        return self.model_dump(by_alias=True)

    def __repr__(self) -> str:
        return "ParameterSet(" + ", ".join(f"{key}={value}" for key, value in self.to_symbols().items()) + ")"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParameterSet):
            return NotImplemented
        return self.to_symbols() == other.to_symbols()

    def __hash__(self) -> int:
        return hash(tuple(self.to_symbols().values()))
