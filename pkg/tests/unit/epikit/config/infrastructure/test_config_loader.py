from pathlib import Path

import pytest

from epikit.config.domain.exceptions import ConfigurationException
from epikit.config.domain.run_config import ModelSection
from epikit.config.infrastructure.config_loader import (
    load_environment,
    load_run_config,
    merge_settings,
    resolve_log_level,
    resolve_parameters,
)
from epikit.model.infrastructure.preset_repository import dump_parameters, load_country_preset
from epikit.observability.domain.log_level_enum import LogLevelEnum


def _write(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


class TestMergeSettings:
    """Test the recursive merge of configuration sources."""

    def test_merge_should_combine_nested_sections(self) -> None:
        # Act
        merged = merge_settings({"fit": {"degree": 2, "free": ["beta1"]}, "seed": 1}, {"fit": {"degree": 3}})

        # Assert
        assert merged == {"fit": {"degree": 3, "free": ["beta1"]}, "seed": 1}

    def test_merge_should_replace_scalars_with_mappings(self) -> None:
        # Act & Assert
        assert merge_settings({"a": 1}, {"a": {"b": 2}}) == {"a": {"b": 2}}


class TestLoadRunConfig:
    """Test configuration precedence and validation."""

    def test_load_without_sources_should_return_defaults(self) -> None:
        # Act
        config = load_run_config()

        # Assert
        assert config.model.preset == "mexico"
        assert config.seed is None

    def test_load_should_prefer_flags_over_environment_over_file(self, tmp_path: Path) -> None:
        # Arrange
        path = _write(tmp_path / "run.yaml", "seed: 3\noutput_dir: from-file\nsimulation:\n  weeks: 52\n")
        environ = {"EPK_SEED": "5", "EPK_OUT": "from-env"}

        # Act
        from_file = load_run_config(path)
        from_env = load_run_config(path, environ)
        from_flags = load_run_config(path, environ, {"seed": 7})

        # Assert
        assert (from_file.seed, from_file.output_dir) == (3, Path("from-file"))
        assert (from_env.seed, from_env.output_dir) == (5, Path("from-env"))
        assert from_flags.seed == 7
        assert from_flags.simulation.weeks == 52.0

    def test_load_empty_file_should_return_defaults(self, tmp_path: Path) -> None:
        # Act
        config = load_run_config(_write(tmp_path / "empty.yaml", ""))

        # Assert
        assert config.simulation.step == 0.1

    def test_load_missing_file_should_raise_configuration_exception(self, tmp_path: Path) -> None:
        # Act & Assert
        with pytest.raises(ConfigurationException) as error:
            load_run_config(tmp_path / "absent.yaml")

        assert error.value.source == str(tmp_path / "absent.yaml")

    def test_load_list_file_should_raise_configuration_exception(self, tmp_path: Path) -> None:
        # Act & Assert
        with pytest.raises(ConfigurationException):
            load_run_config(_write(tmp_path / "list.yaml", "- 1\n- 2\n"))

    def test_load_malformed_yaml_should_raise_configuration_exception(self, tmp_path: Path) -> None:
        # Act & Assert
        with pytest.raises(ConfigurationException):
            load_run_config(_write(tmp_path / "bad.yaml", "seed: [1\n"))

    def test_load_with_two_model_sources_should_list_validation_errors(self, tmp_path: Path) -> None:
        # Arrange
        path = _write(tmp_path / "run.yaml", "model:\n  preset: italy\n  parameters:\n    Lambda: 1.0\n")

        # Act & Assert
        with pytest.raises(ConfigurationException) as error:
            load_run_config(path)

        assert error.value.details["errors"]
        assert error.value.details["errors"][0].startswith("model")

    def test_load_with_missing_data_file_should_raise_configuration_exception(self, tmp_path: Path) -> None:
        # Act & Assert
        with pytest.raises(ConfigurationException) as error:
            load_run_config(overrides={"fit": {"data": str(tmp_path / "absent.csv")}})

        assert set(error.value.details["missing"]) == {"fit.data"}

    def test_load_with_non_integer_seed_variable_should_raise_configuration_exception(self) -> None:
        # Act & Assert
        with pytest.raises(ConfigurationException):
            load_run_config(environ={"EPK_SEED": "abc"})


class TestLoadEnvironment:
    """Test reading a dotenv file."""

    def test_load_dotenv_should_not_override_existing_variables(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        # Arrange
        monkeypatch.setenv("EPK_OUT", "already-set")
        monkeypatch.setenv("EPK_SEED", "placeholder")
        monkeypatch.delenv("EPK_SEED")
        dotenv = _write(tmp_path / ".env", "EPK_OUT=from-dotenv\nEPK_SEED=9\n")

        # Act
        environ = load_environment(dotenv)

        # Assert
        assert environ["EPK_OUT"] == "already-set"
        assert environ["EPK_SEED"] == "9"


class TestResolveLogLevel:
    """Test log level resolution."""

    def test_resolve_should_prefer_flag_over_environment(self) -> None:
        # Act & Assert
        assert resolve_log_level("debug", {"EPK_LOG_LEVEL": "ERROR"}) == LogLevelEnum.DEBUG
        assert resolve_log_level(None, {"EPK_LOG_LEVEL": "error"}) == LogLevelEnum.ERROR
        assert resolve_log_level(None, {}) == LogLevelEnum.INFO

    def test_resolve_unknown_level_should_raise_configuration_exception(self) -> None:
        # Act & Assert
        with pytest.raises(ConfigurationException):
            resolve_log_level("verbose", {})


class TestResolveParameters:
    """Test loading the configured rates."""

    def test_resolve_preset_with_overrides_should_replace_rates(self) -> None:
        # Act
        parameters = resolve_parameters(ModelSection(preset="italy", overrides={"phi": 0.2}))

        # Assert
        assert parameters.vaccination_rate == 0.2
        assert parameters.contact_exposed == load_country_preset("italy").parameters.contact_exposed

    def test_resolve_parameter_file_should_load_its_rates(self, tmp_path: Path) -> None:
        # Arrange
        mexico = load_country_preset("mexico").parameters
        path = _write(tmp_path / "custom.yaml", dump_parameters(mexico))

        # Act
        parameters = resolve_parameters(ModelSection(parameters_file=path))

        # Assert
        assert parameters == mexico

    def test_resolve_inline_rates_should_validate_them(self) -> None:
        # Arrange
        inline = load_country_preset("mexico").parameters.to_symbols()

        # Act
        parameters = resolve_parameters(ModelSection(parameters=inline))

        # Assert
        assert parameters.recruitment == 500.0

    def test_resolve_inline_rates_with_missing_rate_should_raise_configuration_exception(self) -> None:
        # Act & Assert
        with pytest.raises(ConfigurationException):
            resolve_parameters(ModelSection(parameters={"Lambda": 500.0}))

    def test_resolve_unknown_override_should_raise_configuration_exception(self) -> None:
        # Act & Assert
        with pytest.raises(ConfigurationException):
            resolve_parameters(ModelSection(overrides={"kappa": 1.0}))
