import numpy as np
import pytest

from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.reproduction_numbers import r0_without_control
from epikit.sensitivity.domain.exceptions import InvalidRangeException
from epikit.sensitivity.domain.level_grid import level_curve, r0_level_grid
from epikit.sensitivity.domain.parameter_range import ParameterRange

BETA1 = ParameterRange(name="beta1", low=0.0025, high=0.0065)
BETA2 = ParameterRange(name="beta2", low=0.0025, high=0.0065)


class TestR0LevelGrid:
    """Test R0 grids over two rates."""

    def test_grid_over_contact_rates_should_increase_along_both_axes(self, mexico: ParameterSet) -> None:
        # Act
        grid = r0_level_grid(BETA1, BETA2, mexico, resolution=10)

        # Assert
        assert grid.values.shape == (10, 10)
        assert np.all(np.diff(grid.values, axis=0) > 0.0)
        assert np.all(np.diff(grid.values, axis=1) > 0.0)
        assert (grid.x_slope_sign, grid.y_slope_sign) == (1, 1)
        assert len(grid.to_frame()) == 100

    def test_grid_corner_should_equal_direct_evaluation(self, mexico: ParameterSet) -> None:
        # Act
        grid = r0_level_grid(BETA1, BETA2, mexico, resolution=5)

        # Assert
        expected = r0_without_control(mexico.with_overrides({"beta1": 0.0065, "beta2": 0.0025}))
        assert grid.values[0, -1] == pytest.approx(expected, rel=1e-12)

    def test_grid_with_same_axes_should_raise_invalid_range(self, mexico: ParameterSet) -> None:
        # Act & Assert
        with pytest.raises(InvalidRangeException):
            r0_level_grid(BETA1, BETA1, mexico)

    def test_grid_with_single_point_should_raise_invalid_range(self, mexico: ParameterSet) -> None:
        # Act & Assert
        with pytest.raises(InvalidRangeException):
            r0_level_grid(BETA1, BETA2, mexico, resolution=1)


class TestLevelCurve:
    """Test level-set extraction."""

    def test_level_curve_points_should_lie_on_the_level(self, mexico: ParameterSet) -> None:
        # Arrange
        grid = r0_level_grid(BETA1, BETA2, mexico, resolution=20)
        level = float(np.median(grid.values))

        # Act
        points = level_curve(grid, level)

        # Assert
        assert points.shape[1] == 2
        assert points.shape[0] > 0
        for x, y in points:
            value = r0_without_control(mexico.with_overrides({"beta1": x, "beta2": y}))
            assert value == pytest.approx(level, rel=1e-9)

    def test_level_curve_outside_grid_range_should_be_empty(self, mexico: ParameterSet) -> None:
        # Arrange
        grid = r0_level_grid(BETA1, BETA2, mexico, resolution=5)

        # Act
        points = level_curve(grid, 1.5)

        # Assert
        assert points.shape == (0, 2)
