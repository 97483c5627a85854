import numpy as np
import pytest

from epikit.calibration.domain.exceptions import LengthMismatchException
from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.calibration.domain.incidence_model import (
    model_cumulative_series,
    model_series,
    model_weekly_incidence,
)
from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.calibration.domain.least_squares import observed_series, residuals, series_residuals, sse
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector


class TestModelIncidence:
    """Test model-predicted weekly and cumulative incidence."""

    def test_model_without_exposed_or_infected_should_predict_no_cases(self, mexico: ParameterSet) -> None:
        # Arrange
        x0 = StateVector.from_array([500.0, 1.0, 0.0, 0.0, 0.0, 0.0])

        # Act
        weekly = model_weekly_incidence(mexico, x0, 10)

        # Assert
        assert np.all(weekly == 0.0)

    def test_model_without_progression_should_predict_no_cases(
        self, mexico: ParameterSet, initial_state: StateVector
    ) -> None:
        # Act
        weekly = model_weekly_incidence(mexico.with_overrides({"alpha": 0.0}), initial_state, 10)

        # Assert
        assert np.all(weekly == 0.0)

    def test_weekly_incidence_should_sum_to_cumulative(self, mexico: ParameterSet, initial_state: StateVector) -> None:
        # Act
        weekly = model_weekly_incidence(mexico, initial_state, 20)
        cumulative = model_cumulative_series(mexico, initial_state, 20)

        # Assert
        assert weekly.shape == (20,)
        assert np.all(weekly >= 0.0)
        np.testing.assert_allclose(np.cumsum(weekly), cumulative, rtol=1e-12)

    @pytest.mark.slow
    def test_refining_steps_should_leave_series_unchanged(
        self, mexico: ParameterSet, initial_state: StateVector
    ) -> None:
        # Act
        coarse = model_cumulative_series(mexico, initial_state, 10, steps_per_week=100)
        fine = model_cumulative_series(mexico, initial_state, 10, steps_per_week=1000)

        # Assert
        np.testing.assert_allclose(coarse, fine, rtol=1e-8)

    def test_model_series_should_select_target_view(self, mexico: ParameterSet, initial_state: StateVector) -> None:
        # Act & Assert
        assert np.array_equal(
            model_series(mexico, initial_state, 5, FitTargetEnum.WEEKLY),
            model_weekly_incidence(mexico, initial_state, 5),
        )
        assert np.array_equal(
            model_series(mexico, initial_state, 5), model_cumulative_series(mexico, initial_state, 5)
        )

    def test_model_with_zero_weeks_should_raise_value_error(
        self, mexico: ParameterSet, initial_state: StateVector
    ) -> None:
        # Act & Assert
        with pytest.raises(ValueError):
            model_cumulative_series(mexico, initial_state, 0)


class TestLeastSquares:
    """Test residuals and the sum of squares."""

    def test_sse_with_unit_offset_should_equal_week_count(
        self, mexico: ParameterSet, initial_state: StateVector
    ) -> None:
        # Arrange
        data = IncidenceSeries.from_counts(model_weekly_incidence(mexico, initial_state, 12) + 1.0)

        # Act
        value = sse(mexico, data, initial_state, FitTargetEnum.WEEKLY)

        # Assert
        assert value == pytest.approx(12.0, rel=1e-9)

    def test_residuals_should_recover_perturbation(
        self, mexico: ParameterSet, initial_state: StateVector
    ) -> None:
        # Arrange
        perturbation = np.linspace(0.5, 3.0, 12)
        data = IncidenceSeries.from_counts(model_weekly_incidence(mexico, initial_state, 12) + perturbation)

        # Act
        values = residuals(mexico, data, initial_state, FitTargetEnum.WEEKLY)

        # Assert
        np.testing.assert_allclose(values, perturbation, rtol=1e-9)
        assert sse(mexico, data, initial_state, FitTargetEnum.WEEKLY) == pytest.approx(
            float(np.sum(values**2)), rel=1e-12
        )

    def test_observed_series_should_default_to_cumulative(self) -> None:
        # Arrange
        data = IncidenceSeries.from_counts([1, 2, 3])

        # Act & Assert
        assert observed_series(data).tolist() == [1.0, 3.0, 6.0]
        assert observed_series(data, FitTargetEnum.WEEKLY).tolist() == [1.0, 2.0, 3.0]

    def test_series_residuals_with_different_lengths_should_raise_length_mismatch(self) -> None:
        # Act & Assert
        with pytest.raises(LengthMismatchException) as error:
            series_residuals(np.ones(3), np.ones(4))

        assert (error.value.observed, error.value.predicted) == (3, 4)
