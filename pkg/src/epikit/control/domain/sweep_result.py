from typing import Annotated, Tuple

import numpy as np
import pandas as pd
from pydantic import Field

from epikit.control.domain.adjoint_vector import ADJOINT_NAMES
from epikit.control.domain.control_schedule import CONTROL_NAMES, ControlSchedule
from epikit.integration.domain.trajectory import Trajectory
from epikit.model.domain.compartment_vector import COMPARTMENTS
from epikit.shared import BaseValue
from epikit.shared.custom_types import NaturalNumber


class SweepResult(BaseValue):
    """Diagnostics of one forward-backward sweep.

    Attributes:
        states (Trajectory): States under the returned controls.
        adjoints (Trajectory): Costates, zero at the final node.
        controls (ControlSchedule): The returned control schedule.
        objective (float): J for `states` and `controls`.
        iterations (int): Sweep iterations performed.
        converged (bool): Whether states, adjoints and controls all changed by at most the tolerance.
        change_history (Tuple[float, ...]): Largest relative change per iteration.
    """

    states: Trajectory
    adjoints: Trajectory
    controls: ControlSchedule
    objective: float
    iterations: NaturalNumber
    converged: bool
    change_history: Annotated[Tuple[float, ...], Field(default_factory=tuple)]

    def to_frame(self) -> pd.DataFrame:
        """One row per node: t, the six states, the six costates and the three controls."""
        frame = self.states.to_frame(COMPARTMENTS)
        for index, name in enumerate(ADJOINT_NAMES):
            frame[name] = np.asarray(self.adjoints.values[:, index])
        for index, name in enumerate(CONTROL_NAMES):
            frame[name] = np.asarray(self.controls.values[:, index])
        return frame
