"""Reading and writing weekly surveillance files with the header `week,new_cases`."""

import logging
import re
from importlib import resources
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.config.domain.data_bundle import DataBundle
from epikit.config.domain.exceptions import IncidenceParseException, IncidenceValidationException
from epikit.shared.infrastructure.artifacts.artifact_writer import format_csv, write_text_atomic

logger = logging.getLogger(__name__)

INCIDENCE_COLUMNS = ["week", "new_cases"]
SAMPLE_PACKAGE = "epikit.config.data"
SAMPLE_FILE = "mexico_synthetic_weekly.csv"
SAMPLE_COUNTRY = "mexico"

# Row i of the frame sits on line i + 2 of the file, below the header.
_FIRST_DATA_LINE = 2
_TOKENIZER_LINE = re.compile(r"line (\d+)")


def _read_frame(path: Path) -> pd.DataFrame:
    try:
        return pd.read_csv(path, dtype=str, keep_default_na=False, skip_blank_lines=False)
    except pd.errors.EmptyDataError as error:
        raise IncidenceParseException(path=str(path), line=1, reason="the file is empty") from error
    except pd.errors.ParserError as error:
        match = _TOKENIZER_LINE.search(str(error))
        line = int(match.group(1)) if match else 0
        raise IncidenceParseException(path=str(path), line=line, reason="wrong number of fields") from error
    except (OSError, UnicodeDecodeError) as error:
        raise IncidenceParseException(path=str(path), line=0, reason=f"the file is not readable: {error}") from error


def _numeric_column(frame: pd.DataFrame, column: str, path: Path) -> np.ndarray:
    raw = frame[column].str.strip()
    values = pd.to_numeric(raw, errors="coerce").to_numpy(dtype=np.float64)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        row = int(bad[0])
        raise IncidenceParseException(
            path=str(path),
            line=row + _FIRST_DATA_LINE,
            reason=f"{column} is not a finite number",
            content=str(frame[column].iloc[row]),
        )
    return values


def load_incidence_csv(path: Union[str, Path], country: Optional[str] = None) -> DataBundle:
    """Parse a `week,new_cases` file into a validated series.

    Weeks must be integers increasing by exactly one and counts must be non-negative. The load either
    returns the whole series or raises; no partial series is produced.

    Raises:
        IncidenceParseException: If the file is unreadable or a value is malformed, with its line number.
        IncidenceValidationException: If the rows violate `non_empty`, `non_negative_counts`,
            `increasing_weeks` or `consecutive_weeks`.
    """
    file_path = Path(path)
    frame = _read_frame(file_path)
    if [str(column).strip() for column in frame.columns] != INCIDENCE_COLUMNS:
        raise IncidenceParseException(
            path=str(file_path), line=1, reason="expected the header week,new_cases", content=",".join(frame.columns)
        )
    frame.columns = INCIDENCE_COLUMNS
    if frame.empty:
        raise IncidenceValidationException(path=str(file_path), invariant="non_empty")
    weeks = _numeric_column(frame, "week", file_path)
    new_cases = _numeric_column(frame, "new_cases", file_path)
    fractional = np.flatnonzero(np.mod(weeks, 1.0) != 0.0)
    if fractional.size:
        row = int(fractional[0])
        raise IncidenceParseException(
            path=str(file_path), line=row + _FIRST_DATA_LINE, reason="week is not an integer", content=str(weeks[row])
        )
    negative = np.flatnonzero(new_cases < 0.0)
    if negative.size:
        raise IncidenceValidationException(
            path=str(file_path), invariant="non_negative_counts", line=int(negative[0]) + _FIRST_DATA_LINE
        )
    steps = np.diff(weeks)
    for invariant, broken in (("increasing_weeks", steps <= 0.0), ("consecutive_weeks", steps > 1.0)):
        rows = np.flatnonzero(broken)
        if rows.size:
            raise IncidenceValidationException(
                path=str(file_path), invariant=invariant, line=int(rows[0]) + 1 + _FIRST_DATA_LINE
            )
    series = IncidenceSeries(week_index=weeks.astype(np.int64), new_cases=new_cases)
    logger.debug("Incidence file loaded", extra={"context": {"path": str(file_path), "weeks": series.size}})
    return DataBundle(series=series, source=str(file_path), country=country)


def export_incidence_csv(bundle: DataBundle, path: Union[str, Path]) -> Path:
    """Write the series back as `week,new_cases`; a file written here loads to the same series."""
    return write_text_atomic(path, format_csv(bundle.series.to_frame()))


def load_sample_bundle() -> DataBundle:
    """The bundled synthetic 85-week series shaped like a Mexican influenza season."""
    with resources.as_file(resources.files(SAMPLE_PACKAGE).joinpath(SAMPLE_FILE)) as sample:
        return load_incidence_csv(sample, country=SAMPLE_COUNTRY)
