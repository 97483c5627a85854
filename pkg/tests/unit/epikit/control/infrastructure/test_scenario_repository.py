from pathlib import Path

import pytest

from epikit.control.domain.exceptions import InvalidScenarioFileException
from epikit.control.infrastructure.scenario_repository import load_scenario_file, load_weight_presets, parse_scenarios


class TestParseScenarios:
    """Test parsing of scenario lists."""

    def test_parse_scalar_level_should_apply_to_all_controls(self) -> None:
        # Act
        scenarios = parse_scenarios([{"name": "half", "control": 0.5}], source="inline")

        # Assert
        assert scenarios[0].name == "half"
        assert scenarios[0].control.to_array().tolist() == [0.5, 0.5, 0.5]
        assert scenarios[0].weights is None

    def test_parse_mapping_level_should_set_each_control(self) -> None:
        # Act
        scenarios = parse_scenarios(
            [{"name": "mixed", "control": {"w1": 0.1, "w2": 0.2, "w3": 0.3}, "weights": {"a3": 10.0}}],
            source="inline",
        )

        # Assert
        assert scenarios[0].control.to_array().tolist() == [0.1, 0.2, 0.3]
        assert scenarios[0].weights is not None
        assert scenarios[0].weights.a3 == 10.0
        assert scenarios[0].weights.a1 == 20.0

    def test_parse_mapping_instead_of_list_should_raise_invalid_scenario_file(self) -> None:
        # Act & Assert
        with pytest.raises(InvalidScenarioFileException):
            parse_scenarios({"name": "half", "control": 0.5}, source="inline")

    def test_parse_entry_without_control_should_raise_invalid_scenario_file(self) -> None:
        # Act & Assert
        with pytest.raises(InvalidScenarioFileException):
            parse_scenarios([{"name": "half"}], source="inline")

    def test_parse_negative_weight_should_raise_invalid_scenario_file(self) -> None:
        # Act & Assert
        with pytest.raises(InvalidScenarioFileException) as error:
            parse_scenarios([{"name": "bad", "control": 0.5, "weights": {"a3": -1.0}}], source="inline")

        assert error.value.source == "inline"


class TestLoadScenarioFile:
    """Test loading scenarios from disk and from the bundled presets."""

    def test_load_weight_presets_should_pair_levels_with_weights(self) -> None:
        # Act
        scenarios = {scenario.name: scenario for scenario in load_weight_presets()}

        # Assert
        assert set(scenarios) == {"weights_0_0_0", "weights_90_34_87", "weights_62_23_60"}
        assert scenarios["weights_90_34_87"].control.w1 == 0.45
        assert scenarios["weights_62_23_60"].weights.a4 == 23.0

    def test_load_without_path_should_return_weight_presets(self) -> None:
        # Act & Assert
        assert load_scenario_file(None) == load_weight_presets()

    def test_load_user_file_should_parse_yaml_list(self, tmp_path: Path) -> None:
        # Arrange
        path = tmp_path / "scenarios.yaml"
        path.write_text("- name: strong\n  control: 0.9\n", encoding="utf-8")

        # Act
        scenarios = load_scenario_file(path)

        # Assert
        assert [scenario.name for scenario in scenarios] == ["strong"]

    def test_load_missing_file_should_raise_invalid_scenario_file(self, tmp_path: Path) -> None:
        # Act & Assert
        with pytest.raises(InvalidScenarioFileException):
            load_scenario_file(tmp_path / "absent.yaml")
