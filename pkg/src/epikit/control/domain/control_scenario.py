from typing import Annotated, Optional, Tuple

from pydantic import Field

from epikit.control.domain.control_schedule import ControlSchedule
from epikit.control.domain.control_weights import ControlWeights
from epikit.integration.domain.trajectory import Trajectory
from epikit.model.domain.control_vector import ControlVector
from epikit.shared import BaseValue
from epikit.shared.custom_types import ShortString


class ControlScenario(BaseValue):
    """A non-optimising run that holds the controls at a constant level.

    Attributes:
        name (str): Scenario identifier used in artifacts.
        control (ControlVector): The constant intensities.
        weights (Optional[ControlWeights]): Objective weights of the scenario; the run's weights when omitted.
    """

    name: Annotated[ShortString, Field(description="Scenario identifier.", examples=["constant_0.45"])]
    control: ControlVector
    weights: Optional[ControlWeights] = None

    def __repr__(self) -> str:
        return f"ControlScenario(name={self.name}, control={self.control!r}, weights={self.weights!r})"


class ScenarioEvaluation(BaseValue):
    """Objective and trajectory of one constant-control scenario."""

    name: ShortString
    weights: ControlWeights
    states: Trajectory
    controls: ControlSchedule
    objective: float


FIXED_SCENARIOS: Tuple[ControlScenario, ...] = (
    ControlScenario(name="no_control", control=ControlVector.constant(0.0)),
    ControlScenario(name="constant_0.45", control=ControlVector.constant(0.45)),
    ControlScenario(name="constant_0.6", control=ControlVector.constant(0.6)),
    ControlScenario(name="constant_0.75", control=ControlVector.constant(0.75)),
)
