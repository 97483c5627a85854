import numpy as np

from epikit.model.domain.parameter_set import ParameterSet
from epikit.sensitivity.application.run_sensitivity import RunSensitivityCommand, RunSensitivityHandler
from epikit.sensitivity.domain.parameter_range import ParameterRange


class TestRunSensitivityHandler:
    """Test the global sensitivity use case."""

    def test_handle_with_seed_should_be_reproducible(self, mexico: ParameterSet) -> None:
        # Arrange
        command = RunSensitivityCommand(parameters=mexico, n_samples=30, seed=11)

        # Act
        first = RunSensitivityHandler().handle(command)
        second = RunSensitivityHandler().handle(command)

        # Assert
        np.testing.assert_array_equal(first.design.values, second.design.values)
        np.testing.assert_array_equal(first.prcc.prcc, second.prcc.prcc)
        assert first.grid is None
        assert first.level_curves == {}

    def test_handle_with_grid_axes_should_extract_level_curves(self, mexico: ParameterSet) -> None:
        # Arrange
        command = RunSensitivityCommand(
            parameters=mexico,
            n_samples=30,
            seed=0,
            grid_x=ParameterRange(name="beta1", low=0.0025, high=0.0065),
            grid_y=ParameterRange(name="beta2", low=0.0025, high=0.0065),
            grid_resolution=6,
            levels=(1.5, 30.0),
        )

        # Act
        outcome = RunSensitivityHandler().handle(command)

        # Assert
        assert outcome.grid is not None
        assert set(outcome.level_curves) == {"1.5", "30.0"}
        assert outcome.level_curves["1.5"].shape == (0, 2)
        assert outcome.level_curves["30.0"].shape[0] > 0
        assert outcome.bias.n_samples == 30
