import pytest

from epikit.calibration.application.fit_incidence import FitIncidenceCommand, FitIncidenceHandler
from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.calibration.domain.week_window import WeekWindow
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector


class TestFitIncidenceHandler:
    """Test the calibration use case."""

    @pytest.mark.slow
    def test_handle_should_report_fit_growth_and_trend(
        self, mexico: ParameterSet, initial_state: StateVector, synthetic_series: IncidenceSeries
    ) -> None:
        # Arrange
        command = FitIncidenceCommand(
            data=synthetic_series,
            initial_state=initial_state,
            parameters=mexico,
            free=("beta1",),
            bounds={"beta1": (1e-4, 0.05)},
            window=WeekWindow(start=0, stop=10),
            degree=2,
        )

        # Act
        outcome = FitIncidenceHandler().handle(command)
        summary = outcome.summary()

        # Assert
        assert set(outcome.fitted) == {"beta1"}
        assert summary["growth"]["window"] == "0:10"
        assert len(summary["residuals"]) == 30
        assert summary["trend"]["degree"] == 2
        assert len(summary["trend"]["coefficients"]) == 3
        assert summary["exponential_phase_r0"]["formula_caveat"] is True
