from typing import Annotated

from pydantic import Field

from epikit.shared.constants.text_constants import SHORT_STRING_MAX_LENGTH

ShortString = Annotated[
    str,
    Field(
        min_length=1,
        max_length=SHORT_STRING_MAX_LENGTH,
    ),
]
