"""Right-hand sides of the SVEIRT system, with and without the three controls.

The array functions (`controlled_field`, `model_field`) are what the integrators call; `base_rhs` and
`controlled_rhs` wrap them for value objects.
"""

from typing import Optional

import numpy as np

from epikit.model.domain.control_vector import ControlVector
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_derivative import StateDerivative
from epikit.model.domain.state_vector import StateVector

NO_CONTROL = np.zeros(3)


def force_of_infection(x: np.ndarray, p: ParameterSet) -> float:
    """beta1 * E + beta2 * I."""
    return p.contact_exposed * x[2] + p.contact_infected * x[3]


def controlled_field(x: np.ndarray, p: ParameterSet, w: Optional[np.ndarray] = None) -> np.ndarray:
    """Evaluate the controlled system at state `x` (S, V, E, I, R, T) and controls `w` (w1, w2, w3)."""
    w1, w2, w3 = NO_CONTROL if w is None else w
    s, v, e, i, r, t = x
    force = p.contact_exposed * e + p.contact_infected * i
    infection_of_susceptible = (1.0 - w1) * force * s
    infection_of_vaccinated = p.vaccine_inefficiency * force * v
    treatment_flow = (1.0 + w2) * p.treatment * i
    recovery_flow = (1.0 + w3) * p.recovery * i
    return np.array(
        [
            p.recruitment - infection_of_susceptible - (p.natural_death + p.vaccination_rate) * s,
            p.vaccination_rate * s - infection_of_vaccinated - p.natural_death * v,
            infection_of_susceptible - (p.progression + p.natural_death) * e,
            p.progression * e
            + infection_of_vaccinated
            - (p.natural_death + p.disease_death) * i
            - treatment_flow
            - recovery_flow,
            recovery_flow - p.natural_death * r,
            treatment_flow - p.natural_death * t,
        ],
        dtype=np.float64,
    )


def model_field(x: np.ndarray, p: ParameterSet) -> np.ndarray:
    return controlled_field(x, p, NO_CONTROL)


def base_rhs(state: StateVector, p: ParameterSet) -> StateDerivative:
    """Derivative of the uncontrolled model at `state`, persons per week."""
    return StateDerivative.from_array(model_field(state.to_array(), p))


def controlled_rhs(state: StateVector, p: ParameterSet, w: ControlVector) -> StateDerivative:
    """Derivative of the controlled model at `state` under constant controls `w`."""
    return StateDerivative.from_array(controlled_field(state.to_array(), p, w.to_array()))
