from typing import Any, ClassVar

from pydantic import BaseModel, ConfigDict


class BaseValue(BaseModel):
    """Immutable value object shared by every bounded context.

    Enums are stored by value and fields may be populated by name or alias, so model symbols such as
    ``Lambda`` can travel through YAML and JSON unchanged.
    """

    model_config: ClassVar[ConfigDict] = ConfigDict(
        use_enum_values=True,
        frozen=True,
        validate_assignment=True,
        populate_by_name=True,
    )

    def to_record(self) -> dict[str, Any]:
        """JSON-ready mapping keyed by alias, as written to artifacts."""
        return self.model_dump(mode="json", by_alias=True)
