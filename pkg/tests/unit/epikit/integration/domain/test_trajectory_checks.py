import numpy as np
import pytest

from epikit.integration.domain.runge_kutta import integrate_forward
from epikit.integration.domain.time_grid import TimeGrid
from epikit.integration.domain.trajectory import Trajectory
from epikit.integration.domain.trajectory_checks import check_population_bound, check_positivity
from epikit.model.domain.dynamics import model_field
from epikit.model.domain.equilibria import disease_free_equilibrium
from epikit.model.domain.exceptions import DegenerateParameterException
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.infrastructure.preset_repository import load_country_preset


def _simulate(p: ParameterSet, x0: np.ndarray, weeks: float = 120.0, n_steps: int = 1200) -> Trajectory:
    return integrate_forward(lambda _t, x: model_field(x, p), x0, TimeGrid(t0=0.0, tf=weeks, n_steps=n_steps))


class TestCheckPositivity:
    """Test the positivity check."""

    def test_check_positive_trajectory_should_pass_with_margin(self) -> None:
        # Arrange
        trajectory = Trajectory(grid=TimeGrid(t0=0.0, tf=1.0, n_steps=4), values=np.ones((5, 6)))

        # Act
        report = check_positivity(trajectory)

        # Assert
        assert report.passed
        assert report.worst_violation <= 0.0

    def test_check_trajectory_with_negative_entry_should_fail_at_that_node(self) -> None:
        # Arrange
        values = np.ones((5, 6))
        values[2, 3] = -1.0
        trajectory = Trajectory(grid=TimeGrid(t0=0.0, tf=1.0, n_steps=4), values=values)

        # Act
        report = check_positivity(trajectory)

        # Assert
        assert not report.passed
        assert report.location == 2
        assert report.worst_violation == 1.0

    @pytest.mark.parametrize("preset", ["mexico", "italy", "south_africa"])
    def test_check_preset_run_over_120_weeks_should_pass(self, preset: str) -> None:
        # Arrange
        p = load_country_preset(preset).parameters
        x0 = disease_free_equilibrium(p).to_array() + np.array([0.0, 0.0, 1.0, 1.0, 0.0, 0.0])

        # Act
        trajectory = _simulate(p, x0)

        # Assert
        assert check_positivity(trajectory).passed
        assert check_population_bound(trajectory, p).passed


class TestCheckPopulationBound:
    """Test the population bound check."""

    def test_check_population_at_demographic_equilibrium_should_stay_constant(self, mexico: ParameterSet) -> None:
        # Arrange
        p = mexico.with_overrides({"delta": 0.0})
        x0 = np.array([5000.0, 5000.0, 0.0, 0.0, 0.0, 0.0])

        # Act
        trajectory = _simulate(p, x0)
        report = check_population_bound(trajectory, p)

        # Assert
        assert report.passed
        np.testing.assert_allclose(trajectory.population_totals(), 10000.0, rtol=1e-10)

    def test_check_population_above_bound_should_decay_as_closed_form(self, mexico: ParameterSet) -> None:
        # Arrange
        x0 = np.array([20000.0, 0.0, 0.0, 0.0, 0.0, 0.0])

        # Act
        trajectory = _simulate(mexico, x0)
        totals = trajectory.population_totals()

        # Assert
        t = trajectory.times
        expected = 20000.0 * np.exp(-0.05 * t) + 10000.0 * (1.0 - np.exp(-0.05 * t))
        np.testing.assert_allclose(totals, expected, rtol=1e-9)
        assert np.all(np.diff(totals) <= 0.0)
        assert check_population_bound(trajectory, mexico).passed

    def test_check_population_with_zero_mu_should_raise_degenerate_parameter(self, mexico: ParameterSet) -> None:
        # Arrange
        trajectory = Trajectory(grid=TimeGrid(t0=0.0, tf=1.0, n_steps=1), values=np.ones((2, 6)))

        # Act & Assert
        with pytest.raises(DegenerateParameterException):
            check_population_bound(trajectory, mexico.with_overrides({"mu": 0.0}))
