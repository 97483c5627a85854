import numpy as np

from epikit.integration.domain.time_grid import TimeGrid


def interpolate_on_grid(grid: TimeGrid, values: np.ndarray, t: float) -> np.ndarray:
    """Linear interpolation of node values (rows of `values`) at time `t`, clamped to the grid ends."""
    position = (t - grid.t0) / grid.step
    index = min(max(int(np.floor(position)), 0), grid.n_steps - 1)
    fraction = min(max(position - index, 0.0), 1.0)
    lower = values[index]
    if fraction == 0.0:
        return lower
    return lower + fraction * (values[index + 1] - lower)
