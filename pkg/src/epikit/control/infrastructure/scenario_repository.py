import logging
from importlib import resources
from pathlib import Path
from typing import Any, List, Optional, Union

import yaml
from pydantic import ValidationError

from epikit.control.domain.control_scenario import ControlScenario
from epikit.control.domain.exceptions import InvalidScenarioFileException
from epikit.model.domain.control_vector import ControlVector

logger = logging.getLogger(__name__)

SCENARIO_PACKAGE = "epikit.control.infrastructure.scenarios"
WEIGHT_PRESETS_FILE = "weight_presets.yaml"


def parse_scenarios(content: Any, source: str) -> List[ControlScenario]:
    """Turn a YAML list of `{name, control, weights}` entries into scenarios.

    `control` is either a single level applied to all three controls or a `{w1, w2, w3}` mapping.
    """
    if not isinstance(content, list):
        raise InvalidScenarioFileException(source=source)
    scenarios = []
    for entry in content:
        if not isinstance(entry, dict) or "name" not in entry or "control" not in entry:
            raise InvalidScenarioFileException(source=source, problems={"entry": repr(entry)})
        level = entry["control"]
        try:
            control = (
                ControlVector.model_validate(level) if isinstance(level, dict) else ControlVector.constant(level)
            )
            scenarios.append(ControlScenario.model_validate({**entry, "control": control}))
        except ValidationError as error:
            raise InvalidScenarioFileException(
                source=source,
                message="The scenario file holds invalid values.",
                problems={"errors": [err["msg"] for err in error.errors()]},
            ) from error
    return scenarios


def load_weight_presets() -> List[ControlScenario]:
    """The bundled effort-weight presets, each paired with its constant control level."""
    entry = resources.files(SCENARIO_PACKAGE).joinpath(WEIGHT_PRESETS_FILE)
    scenarios = parse_scenarios(yaml.safe_load(entry.read_text(encoding="utf-8")), source=WEIGHT_PRESETS_FILE)
    logger.debug("Loaded weight presets", extra={"context": {"count": len(scenarios)}})
    return scenarios


def load_scenario_file(path: Optional[Union[str, Path]]) -> List[ControlScenario]:
    """Scenarios from a user file, or the bundled weight presets when `path` is None."""
    if path is None:
        return load_weight_presets()
    file_path = Path(path)
    if not file_path.is_file():
        raise InvalidScenarioFileException(source=str(file_path), message="The scenario file does not exist.")
    return parse_scenarios(yaml.safe_load(file_path.read_text(encoding="utf-8")), source=str(file_path))
