import numpy as np
import pytest

from epikit.integration.domain.time_grid import TimeGrid
from epikit.model.domain.exceptions import DegenerateParameterException
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.reproduction_numbers import endemic_threshold, r0_without_control
from epikit.model.domain.state_vector import StateVector
from epikit.sensitivity.domain.latin_hypercube import lhs_sample
from epikit.sensitivity.domain.model_evaluation import evaluate_model_over_samples, output_function
from epikit.sensitivity.domain.parameter_range import DEFAULT_RANGES, ParameterRange
from epikit.sensitivity.domain.sensitivity_output_enum import SensitivityOutputEnum


class TestEvaluateModelOverSamples:
    """Test evaluation of outputs over a design."""

    def test_evaluate_r0_should_match_row_overrides(self, mexico: ParameterSet) -> None:
        # Arrange
        design = lhs_sample(DEFAULT_RANGES, 8, seed=0)

        # Act
        evaluation = evaluate_model_over_samples(design, mexico)

        # Assert
        expected = [r0_without_control(mexico.with_overrides(design.row(i))) for i in range(8)]
        np.testing.assert_allclose(evaluation.values, expected, rtol=1e-12)
        assert evaluation.failures == 0

    def test_evaluate_with_threads_should_keep_row_order(self, mexico: ParameterSet) -> None:
        # Arrange
        design = lhs_sample(DEFAULT_RANGES, 20, seed=9)

        # Act
        sequential = evaluate_model_over_samples(design, mexico)
        threaded = evaluate_model_over_samples(design, mexico, max_workers=4)

        # Assert
        np.testing.assert_array_equal(sequential.values, threaded.values)

    def test_evaluate_failing_rows_should_hold_nan(self, mexico: ParameterSet) -> None:
        # Arrange
        design = lhs_sample([ParameterRange(name="beta1", low=0.0, high=1.0)], 20, seed=0)

        def fragile(p: ParameterSet) -> float:
            if p.contact_exposed > 0.5:
                raise DegenerateParameterException(quantity="beta1")
            return p.contact_exposed

        # Act
        evaluation = evaluate_model_over_samples(design, mexico, fragile)

        # Assert
        assert evaluation.failures == 10
        assert np.array_equal(~evaluation.valid, design.column("beta1") > 0.5)

    def test_evaluate_simulated_output_should_need_initial_state(self) -> None:
        # Act & Assert
        with pytest.raises(ValueError):
            output_function(SensitivityOutputEnum.PEAK_INFECTED)

    def test_output_function_should_map_names(self, mexico: ParameterSet, initial_state: StateVector) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=10.0, n_steps=100)

        # Act
        peak = output_function(SensitivityOutputEnum.PEAK_INFECTED, initial_state, grid)(mexico)
        total = output_function(SensitivityOutputEnum.CUMULATIVE_INFECTED, initial_state, grid)(mexico)

        # Assert
        assert output_function(SensitivityOutputEnum.R0) is r0_without_control
        assert output_function(SensitivityOutputEnum.R0_WITH_CONTROL) is endemic_threshold
        assert peak > 0.0
        assert total > 0.0
