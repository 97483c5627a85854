"""Run configuration loading.

Sources are merged in this order, later ones winning: field defaults, the YAML file, the environment
(`EPK_OUT`, `EPK_SEED`, optionally from a `.env` file) and the command-line flags.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, MutableMapping, Optional, Union

import yaml
from dotenv import find_dotenv, load_dotenv
from pydantic import ValidationError

from epikit.config.domain.exceptions import ConfigurationException
from epikit.config.domain.run_config import ModelSection, RunConfig
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.infrastructure.preset_repository import load_country_preset, load_parameter_file
from epikit.observability.domain.log_level_enum import LogLevelEnum

logger = logging.getLogger(__name__)

ENV_OUTPUT_DIR = "EPK_OUT"
ENV_SEED = "EPK_SEED"
ENV_LOG_LEVEL = "EPK_LOG_LEVEL"


def merge_settings(base: Mapping[str, Any], update: Mapping[str, Any]) -> Dict[str, Any]:
    """Recursive merge of two nested mappings; values of `update` win, nested mappings are merged key by key."""
    merged: Dict[str, Any] = dict(base)
    for key, value in update.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), Mapping):
            merged[key] = merge_settings(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_environment(dotenv_path: Optional[Union[str, Path]] = None) -> MutableMapping[str, str]:
    """Read a `.env` file into the process environment without overriding variables already set."""
    path = dotenv_path or find_dotenv(usecwd=True)
    if path:
        load_dotenv(dotenv_path=path, override=False)
    return os.environ


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    file_path = Path(path)
    if not file_path.is_file():
        raise ConfigurationException("The configuration file does not exist.", source=str(file_path))
    try:
        content = yaml.safe_load(file_path.read_text(encoding="utf-8"))
    except yaml.YAMLError as error:
        raise ConfigurationException(
            "The configuration file is not valid YAML.", source=str(file_path), details={"reason": str(error)}
        ) from error
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ConfigurationException("The configuration file must hold a mapping.", source=str(file_path))
    return content


def environment_settings(environ: Mapping[str, str]) -> Dict[str, Any]:
    settings: Dict[str, Any] = {}
    if environ.get(ENV_OUTPUT_DIR):
        settings["output_dir"] = environ[ENV_OUTPUT_DIR]
    if environ.get(ENV_SEED):
        try:
            settings["seed"] = int(environ[ENV_SEED])
        except ValueError as error:
            raise ConfigurationException(
                f"{ENV_SEED} must be an integer.", source=ENV_SEED, details={"value": environ[ENV_SEED]}
            ) from error
    return settings


def _describe(error: Any) -> str:
    return ".".join(str(part) for part in error["loc"]) + ": " + error["msg"]


def load_run_config(
    path: Optional[Union[str, Path]] = None,
    environ: Optional[Mapping[str, str]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """Merge every configuration source and validate the result.

    Args:
        path: YAML configuration file, if any.
        environ: Environment to read `EPK_*` variables from; none are read when omitted.
        overrides: Nested settings from command-line flags.

    Returns:
        RunConfig: The validated configuration.

    Raises:
        ConfigurationException: If a source cannot be read, the merged settings are invalid or a referenced file
            does not exist.
    """
    settings: Dict[str, Any] = read_config_file(path) if path is not None else {}
    settings = merge_settings(settings, environment_settings(environ or {}))
    settings = merge_settings(settings, overrides or {})
    source = str(path) if path is not None else None
    try:
        config = RunConfig.model_validate(settings)
    except ValidationError as error:
        raise ConfigurationException(
            source=source,
            details={"errors": [_describe(err) for err in error.errors()]},
        ) from error
    missing = {key: str(file) for key, file in config.referenced_files().items() if not file.is_file()}
    if missing:
        raise ConfigurationException("A referenced file does not exist.", source=source, details={"missing": missing})
    logger.debug(
        "Run configuration loaded",
        extra={"context": {"source": source, "model": config.model.source_name, "seed": config.seed}},
    )
    return config


def resolve_log_level(flag: Optional[str], environ: Mapping[str, str]) -> LogLevelEnum:
    """The `--log-level` flag, else `EPK_LOG_LEVEL`, else INFO."""
    raw = flag or environ.get(ENV_LOG_LEVEL) or LogLevelEnum.INFO.value
    try:
        return LogLevelEnum(raw.upper())
    except ValueError as error:
        raise ConfigurationException(
            "Unknown log level.", source=ENV_LOG_LEVEL if not flag else "--log-level", details={"value": raw}
        ) from error


def resolve_parameters(section: ModelSection) -> ParameterSet:
    """Load the configured rates and apply the overrides.

    Raises:
        PresetNotFoundException: If the preset or parameter file does not exist.
        InvalidPresetException: If the loaded rates are malformed.
        ConfigurationException: If inline values or overrides are invalid.
    """
    try:
        if section.preset is not None:
            parameters = load_country_preset(section.preset).parameters
        elif section.parameters_file is not None:
            parameters = load_parameter_file(section.parameters_file)
        else:
            parameters = ParameterSet.model_validate(section.parameters)
        return parameters.with_overrides(section.overrides) if section.overrides else parameters
    except ValidationError as error:
        raise ConfigurationException(
            "The model rates are invalid.",
            source="model",
            details={"errors": [err["msg"] for err in error.errors()]},
        ) from error
    except ValueError as error:
        raise ConfigurationException(
            "Unknown rate name.", source="model.overrides", details={"reason": str(error)}
        ) from error
