from typing import Any, ClassVar, Iterator, Tuple

import numpy as np
from pydantic import ConfigDict

from epikit.shared.base_value import BaseValue


def as_readonly_array(value: Any, ndim: int) -> np.ndarray:
    """Copy `value` into a float64 array of the given rank and lock it against writes."""
    array = np.array(value, dtype=np.float64)
    if array.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional array, got shape {array.shape}")
    array.setflags(write=False)
    return array


class BaseArrayValue(BaseValue):
    """Base class for value objects that carry numpy arrays.

    Array fields are stored read-only, so instances stay immutable like every other value object.
    Equality compares arrays element-wise (NaN-aware) instead of relying on pydantic's field comparison.
    """

    model_config: ClassVar[ConfigDict] = ConfigDict(
        use_enum_values=True,
        frozen=True,
        validate_assignment=True,
        populate_by_name=True,
        arbitrary_types_allowed=True,
    )

    def _field_values(self) -> Iterator[Tuple[str, Any]]:
        for name in type(self).model_fields:
            yield name, getattr(self, name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        for (_, mine), (_, theirs) in zip(self._field_values(), other._field_values()):
            if isinstance(mine, np.ndarray) or isinstance(theirs, np.ndarray):
                if not np.array_equal(np.asarray(mine), np.asarray(theirs), equal_nan=True):
                    return False
            elif mine != theirs:
                return False
        return True

    def __hash__(self) -> int:
        parts = []
        for _, value in self._field_values():
            if isinstance(value, np.ndarray):
                parts.append((value.shape, value.tobytes()))
            elif isinstance(value, (list, dict, set)):
                parts.append(repr(value))
            else:
                parts.append(value)
        return hash(tuple(parts))
