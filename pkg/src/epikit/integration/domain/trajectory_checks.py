"""Runtime checks of the positivity and boundedness properties of model solutions."""

import numpy as np

from epikit.integration.domain.trajectory import Trajectory
from epikit.integration.domain.trajectory_report import TrajectoryReport
from epikit.model.domain.exceptions import DegenerateParameterException
from epikit.model.domain.parameter_set import ParameterSet
from epikit.shared.constants.tolerance_constants import POPULATION_BOUND_TOLERANCE, POSITIVITY_TOLERANCE


def check_positivity(traj: Trajectory) -> TrajectoryReport:
    """Every component at every node must be >= -1e-9 * max(1, ||x0||_inf).

    The reported violation is the negated minimum, so it is negative when everything stays positive.
    """
    scale = max(1.0, float(np.max(np.abs(traj.initial))))
    flat_index = int(np.argmin(traj.values))
    node, _ = np.unravel_index(flat_index, traj.values.shape)
    worst = -float(traj.values.flat[flat_index])
    tolerance = POSITIVITY_TOLERANCE * scale
    return TrajectoryReport(
        check="positivity",
        passed=worst <= tolerance,
        worst_violation=worst,
        tolerance=tolerance,
        location=int(node),
    )


def check_population_bound(traj: Trajectory, p: ParameterSet) -> TrajectoryReport:
    """N(t) must stay below max(N(0), Lambda / mu) up to a relative slack of 1e-9.

    Raises:
        DegenerateParameterException: If mu is zero.
    """
    if not p.natural_death > 0.0:
        raise DegenerateParameterException(quantity="mu", values=p.to_symbols())
    totals = traj.population_totals()
    bound = max(float(totals[0]), p.recruitment / p.natural_death)
    excess = totals - bound
    node = int(np.argmax(excess))
    worst = float(excess[node])
    tolerance = POPULATION_BOUND_TOLERANCE * bound
    return TrajectoryReport(
        check="population_bound",
        passed=worst <= tolerance,
        worst_violation=worst,
        tolerance=tolerance,
        location=node,
    )
