import pytest
from pydantic import ValidationError

from epikit.integration.domain.time_grid import TimeGrid


class TestTimeGrid:
    """Test TimeGrid construction and derived quantities."""

    def test_from_step_over_120_weeks_should_have_1201_nodes(self) -> None:
        # Act
        grid = TimeGrid.from_step(0.0, 120.0, 0.1)

        # Assert
        assert grid.n_steps == 1200
        assert grid.times.size == 1201
        assert grid.step == pytest.approx(0.1, rel=1e-12)
        assert grid.times[-1] == 120.0

    def test_create_grid_with_reversed_ends_should_raise_validation_error(self) -> None:
        # Act & Assert
        with pytest.raises(ValidationError):
            TimeGrid(t0=5.0, tf=1.0, n_steps=10)

    def test_create_grid_with_zero_steps_should_raise_validation_error(self) -> None:
        # Act & Assert
        with pytest.raises(ValidationError):
            TimeGrid(t0=0.0, tf=1.0, n_steps=0)

    def test_from_step_with_non_positive_step_should_raise_value_error(self) -> None:
        # Act & Assert
        with pytest.raises(ValueError):
            TimeGrid.from_step(0.0, 1.0, 0.0)
