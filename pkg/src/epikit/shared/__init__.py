from epikit.shared.base_array_value import BaseArrayValue
from epikit.shared.base_value import BaseValue

__all__ = [
    "BaseValue",
    "BaseArrayValue",
]
