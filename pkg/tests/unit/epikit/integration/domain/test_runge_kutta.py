import numpy as np
import pytest

from epikit.integration.domain.exceptions import NonFiniteStateException
from epikit.integration.domain.grid_interpolation import interpolate_on_grid
from epikit.integration.domain.runge_kutta import integrate_backward, integrate_forward
from epikit.integration.domain.time_grid import TimeGrid


def _decay(rate: float):
    def rhs(_t: float, x: np.ndarray) -> np.ndarray:
        return -rate * x

    return rhs


def _endpoint_error(n_steps: int) -> float:
    grid = TimeGrid(t0=0.0, tf=2.0, n_steps=n_steps)
    final = integrate_forward(_decay(1.0), [1.0], grid).final[0]
    return abs(final - np.exp(-2.0))


class TestIntegrateForward:
    """Test forward RK4 integration."""

    def test_integrate_zero_field_should_keep_initial_value(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=10.0, n_steps=50)

        # Act
        trajectory = integrate_forward(lambda _t, x: np.zeros_like(x), [1, 2, 3, 4, 5, 6], grid)

        # Assert
        assert np.all(trajectory.values == np.array([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]))

    def test_integrate_exponential_decay_should_match_closed_form(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=10.0, n_steps=100)
        x0 = np.array([500.0, 0.0, 0.0, 0.0, 0.0, 0.0])

        # Act
        trajectory = integrate_forward(_decay(0.05), x0, grid)

        # Assert
        assert trajectory.final[0] == pytest.approx(np.exp(-0.5) * 500.0, rel=1e-9)

    def test_halving_step_should_reduce_error_by_fourth_power(self) -> None:
        # Act
        errors = [_endpoint_error(n) for n in (10, 20, 40)]
        orders = [np.log2(errors[k] / errors[k + 1]) for k in range(2)]

        # Assert
        for order in orders:
            assert 3.7 <= order <= 4.3

    def test_integrate_same_inputs_twice_should_be_bit_identical(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=3.0, n_steps=30)

        # Act
        first = integrate_forward(_decay(0.3), [1.0, 2.0], grid)
        second = integrate_forward(_decay(0.3), [1.0, 2.0], grid)

        # Assert
        assert first == second

    def test_integrate_exploding_field_should_raise_non_finite_state(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=1.0, n_steps=4)

        # Act & Assert
        with pytest.raises(NonFiniteStateException) as error:
            integrate_forward(lambda _t, x: np.full_like(x, np.inf), [1.0], grid)

        assert error.value.step_index == 1

    @pytest.mark.parametrize("x0", [[np.nan, 1.0], [1.0, np.inf]])
    def test_integrate_from_non_finite_initial_value_should_raise_non_finite_state(self, x0: list) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=1.0, n_steps=4)

        # Act & Assert
        with pytest.raises(NonFiniteStateException) as error:
            integrate_forward(_decay(0.3), x0, grid)

        assert error.value.step_index == 0
        assert error.value.time == 0.0


class TestIntegrateBackward:
    """Test backward RK4 integration from a terminal value."""

    def test_integrate_zero_field_from_zero_should_stay_zero(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=12.0, n_steps=120)

        # Act
        trajectory = integrate_backward(lambda _t, x: np.zeros_like(x), np.zeros(6), grid)

        # Assert
        assert np.all(trajectory.values == 0.0)

    def test_integrate_constant_field_should_be_linear_in_time(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=4.0, n_steps=8)
        slope = np.array([2.0, -1.0])

        # Act
        trajectory = integrate_backward(lambda _t, _x: slope, [0.0, 0.0], grid)

        # Assert
        expected = np.outer(grid.times - 4.0, slope)
        np.testing.assert_allclose(trajectory.values, expected, rtol=0.0, atol=1e-12)

    def test_backward_from_forward_endpoint_should_return_initial_value(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=10.0, n_steps=100)
        x0 = np.array([1.0, 2.0, 3.0])
        forward = integrate_forward(_decay(0.2), x0, grid)

        # Act
        backward = integrate_backward(_decay(0.2), forward.final, grid)

        # Assert
        np.testing.assert_allclose(backward.initial, x0, rtol=1e-9)

    def test_integrate_from_nan_terminal_value_should_raise_at_last_node(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=1.0, n_steps=4)

        # Act & Assert
        with pytest.raises(NonFiniteStateException) as error:
            integrate_backward(_decay(0.3), [np.nan], grid)

        assert error.value.step_index == 4


class TestInterpolateOnGrid:
    """Test linear interpolation of node values."""

    def test_interpolate_between_nodes_should_be_linear(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=2.0, n_steps=2)
        values = np.array([[0.0], [10.0], [30.0]])

        # Act & Assert
        assert interpolate_on_grid(grid, values, 0.5)[0] == pytest.approx(5.0)
        assert interpolate_on_grid(grid, values, 1.5)[0] == pytest.approx(20.0)

    def test_interpolate_outside_grid_should_clamp_to_ends(self) -> None:
        # Arrange
        grid = TimeGrid(t0=0.0, tf=2.0, n_steps=2)
        values = np.array([[0.0], [10.0], [30.0]])

        # Act & Assert
        assert interpolate_on_grid(grid, values, -1.0)[0] == 0.0
        assert interpolate_on_grid(grid, values, 5.0)[0] == 30.0
