"""Classical fourth-order Runge-Kutta on a uniform grid, forward in time and backward from a terminal value."""

from typing import Callable, Sequence, Union

import numpy as np

from epikit.integration.domain.exceptions import NonFiniteStateException
from epikit.integration.domain.time_grid import TimeGrid
from epikit.integration.domain.trajectory import Trajectory
from epikit.model.domain.compartment_vector import CompartmentVector

VectorField = Callable[[float, np.ndarray], np.ndarray]
InitialValue = Union[CompartmentVector, Sequence[float], np.ndarray]


def _as_vector(value: InitialValue) -> np.ndarray:
    if isinstance(value, CompartmentVector):
        return value.to_array()
    return np.array(value, dtype=np.float64)


def rk4_step(rhs: VectorField, t: float, x: np.ndarray, h: float) -> np.ndarray:
    """Advance `x` from `t` to `t + h`. A negative `h` steps backward."""
    k1 = rhs(t, x)
    k2 = rhs(t + 0.5 * h, x + 0.5 * h * k1)
    k3 = rhs(t + 0.5 * h, x + 0.5 * h * k2)
    k4 = rhs(t + h, x + h * k3)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate_forward(rhs: VectorField, x0: InitialValue, grid: TimeGrid) -> Trajectory:
    """Integrate dx/dt = rhs(t, x) from x(t0) = x0 over `grid`.

    Args:
        rhs: Vector field evaluated as `rhs(t, x)`.
        x0: Initial value, stored unchanged at index 0.
        grid: Uniform grid; one RK4 step per interval.

    Returns:
        Trajectory: Values at every node, ascending in time.

    Raises:
        NonFiniteStateException: If `x0` or any step holds NaN or infinity.
    """
    times = grid.times
    h = grid.step
    values = np.empty((grid.n_steps + 1, _as_vector(x0).size), dtype=np.float64)
    values[0] = _as_vector(x0)
    if not np.all(np.isfinite(values[0])):
        raise NonFiniteStateException(step_index=0, time=float(times[0]), message="The initial value is not finite.")
    for k in range(grid.n_steps):
        values[k + 1] = rk4_step(rhs, times[k], values[k], h)
        if not np.all(np.isfinite(values[k + 1])):
            raise NonFiniteStateException(step_index=k + 1, time=float(times[k + 1]))
    return Trajectory(grid=grid, values=values)


def integrate_backward(rhs: VectorField, xf: InitialValue, grid: TimeGrid) -> Trajectory:
    """Integrate dx/dt = rhs(t, x) from the terminal value x(tf) = xf down to t0.

    The returned values are ordered ascending in time, so `values[-1]` is `xf`.

    Raises:
        NonFiniteStateException: If `xf` or any step holds NaN or infinity.
    """
    times = grid.times
    h = grid.step
    values = np.empty((grid.n_steps + 1, _as_vector(xf).size), dtype=np.float64)
    values[-1] = _as_vector(xf)
    if not np.all(np.isfinite(values[-1])):
        raise NonFiniteStateException(
            step_index=grid.n_steps, time=float(times[-1]), message="The terminal value is not finite."
        )
    for k in range(grid.n_steps, 0, -1):
        values[k - 1] = rk4_step(rhs, times[k], values[k], -h)
        if not np.all(np.isfinite(values[k - 1])):
            raise NonFiniteStateException(step_index=k - 1, time=float(times[k - 1]))
    return Trajectory(grid=grid, values=values)
