from epikit.shared.custom_types.counts import NaturalNumber, PositiveInteger
from epikit.shared.custom_types.non_negative_float import NonNegativeFloat
from epikit.shared.custom_types.positive_float import PositiveFloat
from epikit.shared.custom_types.short_string import ShortString
from epikit.shared.custom_types.unit_interval import UnitInterval

__all__ = [
    "ShortString",
    "NaturalNumber",
    "PositiveInteger",
    "NonNegativeFloat",
    "PositiveFloat",
    "UnitInterval",
]
