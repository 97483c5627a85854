import json
from pathlib import Path

import pytest
from pytest_mock import MockerFixture

from epikit.config.domain.exceptions import UsageException
from epikit.model.domain.exceptions import DegenerateParameterException
from epikit.presentation.cli.commands import COMMANDS
from epikit.presentation.cli.exit_code_enum import ExitCodeEnum
from epikit.presentation.cli.main import build_parser, flag_overrides, main


class TestExitCodeEnum:
    """Test mapping of exception codes to exit statuses."""

    def test_for_code_with_known_code_should_return_its_status(self) -> None:
        # Act & Assert
        assert ExitCodeEnum.for_code("unknown_command") == 11
        assert ExitCodeEnum.for_code("incidence_validation") == 13
        assert ExitCodeEnum.for_code("degenerate_parameter") == 20
        assert ExitCodeEnum.for_code("usage") == 2
        assert ExitCodeEnum.for_code("insufficient_data") == 54

    def test_for_code_with_unknown_code_should_return_internal_error(self) -> None:
        # Act & Assert
        assert ExitCodeEnum.for_code("something_else") == ExitCodeEnum.INTERNAL_ERROR_EXCEPTION

    def test_exit_codes_should_be_distinct(self) -> None:
        # Act & Assert
        assert len({int(member) for member in ExitCodeEnum}) == len(ExitCodeEnum)


class TestCommands:
    """Test the registered subcommands."""

    def test_commands_should_list_the_six_subcommands(self) -> None:
        # Act & Assert
        assert set(COMMANDS) == {"simulate", "control", "fit", "sensitivity", "rt", "report"}


class TestBuildParser:
    """Test that parser failures become domain errors."""

    @pytest.mark.parametrize("argv", [[], ["simulate", "--bogus"], ["simulate", "--degree", "two"]])
    def test_parse_invalid_arguments_should_raise_usage_exception(self, argv: list) -> None:
        # Act & Assert
        with pytest.raises(UsageException) as error:
            build_parser().parse_args(argv)

        assert error.value.code == "usage"
        assert error.value.details["reason"]


class TestFlagOverrides:
    """Test translation of flags into configuration settings."""

    def test_overrides_without_flags_should_be_empty(self) -> None:
        # Arrange
        args = build_parser().parse_args(["simulate"])

        # Act & Assert
        assert flag_overrides(args) == {}

    def test_overrides_with_every_flag_should_nest_settings(self) -> None:
        # Arrange
        args = build_parser().parse_args(
            [
                "fit",
                "--preset", "italy",
                "--seed", "4",
                "--out", "results",
                "--weeks", "2:9",
                "--h", "0.05",
                "--data", "cases.csv",
                "--degree", "3",
                "--config", "run.yaml",
            ]
        )

        # Act
        overrides = flag_overrides(args)

        # Assert
        assert args.config == Path("run.yaml")
        assert overrides == {
            "model": {"preset": "italy", "parameters_file": None, "parameters": None},
            "seed": 4,
            "output_dir": "results",
            "simulation": {"step": 0.05},
            "control": {"step": 0.05},
            "fit": {"window": "2:9", "degree": 3, "data": "cases.csv"},
            "rt": {"data": "cases.csv"},
        }


@pytest.mark.usefixtures("restore_epikit_logger")
class TestMain:
    """Test error handling of the entry point."""

    def test_main_with_unexpected_error_should_exit_1_with_error_line(
        self, tmp_path: Path, mocker: MockerFixture, capsys: pytest.CaptureFixture[str]
    ) -> None:
        # Arrange
        failing = mocker.Mock(side_effect=RuntimeError("disk on fire"))
        mocker.patch.dict(COMMANDS, {"simulate": failing})

        # Act
        status = main(["simulate", "--out", str(tmp_path), "--log-level", "critical"])

        # Assert
        entry = json.loads(capsys.readouterr().err.splitlines()[-1])
        assert status == ExitCodeEnum.INTERNAL_ERROR_EXCEPTION
        assert entry["code"] == "internal_error_exception"
        assert entry["details"] == {"type": "RuntimeError"}
        failing.assert_called_once()

    def test_main_with_domain_error_should_use_its_exit_code(
        self, tmp_path: Path, mocker: MockerFixture, capsys: pytest.CaptureFixture[str]
    ) -> None:
        # Arrange
        mocker.patch.dict(
            COMMANDS, {"report": mocker.Mock(side_effect=DegenerateParameterException("mu", "mu must be positive"))}
        )

        # Act
        status = main(["report", "--out", str(tmp_path)])

        # Assert
        assert status == ExitCodeEnum.DEGENERATE_PARAMETER
        assert json.loads(capsys.readouterr().err.splitlines()[-1])["code"] == "degenerate_parameter"
