import json
import logging
import math
import os
import tempfile
from pathlib import Path
from typing import Any, List, Union

import pandas as pd

from epikit.shared.constants.text_constants import CSV_LINE_TERMINATOR, FLOAT_FORMAT
from epikit.shared.exceptions import ArtifactWriteException

logger = logging.getLogger(__name__)


def format_csv(frame: pd.DataFrame) -> str:
    """Render a frame as comma-delimited text with LF endings and 17 significant digits."""
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator=CSV_LINE_TERMINATOR, na_rep="")


def _json_ready(value: Any) -> Any:
    # NaN and infinities become null; JSON has no spelling for them.
    if isinstance(value, dict):
        return {str(key): _json_ready(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(item) for item in value]
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def format_json(payload: Any) -> str:
    return json.dumps(_json_ready(payload), indent=2, allow_nan=False) + "\n"


def write_text_atomic(path: Union[str, Path], text: str) -> Path:
    """Write `text` to a temporary sibling of `path` and rename it into place.

    Readers never observe a partially written file under the final name.
    """
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        handle, temp_name = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
        try:
            with os.fdopen(handle, "w", encoding="utf-8", newline="") as stream:
                stream.write(text)
            os.replace(temp_name, target)
        except BaseException:
            Path(temp_name).unlink(missing_ok=True)
            raise
    except OSError as error:
        raise ArtifactWriteException(path=str(target), reason=str(error)) from error
    return target


class ArtifactWriter:
    """Writes the artifacts of one command run below a common output directory.

    Attributes:
        root (Path): Directory receiving the artifacts.
        written (List[Path]): Every artifact written so far, in order.
    """

    def __init__(self, root: Union[str, Path]) -> None:
        self.root = Path(root)
        self.written: List[Path] = []

    def _target(self, relative: str) -> Path:
        return self.root / relative

    def write_csv(self, relative: str, frame: pd.DataFrame) -> Path:
        path = write_text_atomic(self._target(relative), format_csv(frame))
        self.written.append(path)
        logger.debug("Wrote CSV artifact", extra={"context": {"path": str(path), "rows": len(frame)}})
        return path

    def write_json(self, relative: str, payload: Any) -> Path:
        path = write_text_atomic(self._target(relative), format_json(payload))
        self.written.append(path)
        logger.debug("Wrote JSON artifact", extra={"context": {"path": str(path)}})
        return path
