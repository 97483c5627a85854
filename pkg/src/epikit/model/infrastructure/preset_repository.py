import logging
from importlib import resources
from pathlib import Path
from typing import Any, List, Mapping, Union

import yaml
from pydantic import ValidationError

from epikit.model.domain.country_preset import CountryPreset
from epikit.model.domain.exceptions import InvalidPresetException, PresetNotFoundException
from epikit.model.domain.parameter_name_enum import ParameterNameEnum
from epikit.model.domain.parameter_set import ParameterSet

logger = logging.getLogger(__name__)

PRESET_PACKAGE = "epikit.model.infrastructure.presets"
PRESET_SUFFIX = ".yaml"
PRESET_KEYS = frozenset(name.value for name in ParameterNameEnum if name is not ParameterNameEnum.VACCINE_INEFFICIENCY)


def available_presets() -> List[str]:
    """Names of the bundled country presets, sorted."""
    root = resources.files(PRESET_PACKAGE)
    return sorted(entry.name[: -len(PRESET_SUFFIX)] for entry in root.iterdir() if entry.name.endswith(PRESET_SUFFIX))


def parse_parameters(content: Any, source: str) -> ParameterSet:
    """Validate a flat mapping holding exactly the model's rate keys."""
    if not isinstance(content, Mapping):
        raise InvalidPresetException(source=source, message="The parameter file must be a flat key-value mapping.")
    keys = {str(key) for key in content}
    missing, unexpected = sorted(PRESET_KEYS - keys), sorted(keys - PRESET_KEYS)
    if missing or unexpected:
        raise InvalidPresetException(source=source, problems={"missing": missing, "unexpected": unexpected})
    try:
        return ParameterSet.model_validate(dict(content))
    except ValidationError as error:
        raise InvalidPresetException(
            source=source,
            message="The parameter file holds invalid values.",
            problems={"errors": [err["msg"] for err in error.errors()]},
        ) from error


def load_country_preset(name: str) -> CountryPreset:
    """Load one of the bundled presets (`mexico`, `italy`, `south_africa`).

    Raises:
        PresetNotFoundException: If no bundled preset has that name.
        InvalidPresetException: If the preset content is malformed.
    """
    key = name.strip().lower().replace(" ", "_").replace("-", "_")
    entry = resources.files(PRESET_PACKAGE).joinpath(key + PRESET_SUFFIX)
    if not entry.is_file():
        raise PresetNotFoundException(name=name, available=available_presets())
    parameters = parse_parameters(yaml.safe_load(entry.read_text(encoding="utf-8")), source=key)
    logger.debug("Loaded country preset", extra={"context": {"preset": key}})
    return CountryPreset(name=key, parameters=parameters)


def load_parameter_file(path: Union[str, Path]) -> ParameterSet:
    """Load a user parameter file with the same keys as the bundled presets."""
    file_path = Path(path)
    if not file_path.is_file():
        raise PresetNotFoundException(name=str(file_path), message="The parameter file does not exist.")
    return parse_parameters(yaml.safe_load(file_path.read_text(encoding="utf-8")), source=str(file_path))


def dump_parameters(parameters: ParameterSet) -> str:
    """Render a parameter set in the preset file format."""
    return yaml.safe_dump(parameters.to_symbols(), sort_keys=False)
