"""Objective, Hamiltonian, costate equations and control law of the optimal-control problem.

With F = beta1 E + beta2 I and lambda = 1 - epsilon the Hamiltonian is

    H = a1 E + a2 I + a3 w1^2 + a4 w2^2 + a5 w3^2 + sum_i psi_i f_i(x, w),

the costates follow dpsi/dt = -dH/dx with psi(tf) = 0, and minimising H pointwise over [0, 1]^3 gives
the clamped control law implemented by `optimality_candidates`.
"""

import numpy as np
from scipy.integrate import trapezoid

from epikit.control.domain.adjoint_vector import AdjointVector
from epikit.control.domain.control_schedule import ControlSchedule
from epikit.control.domain.control_weights import ControlWeights
from epikit.integration.domain.exceptions import GridMismatchException
from epikit.integration.domain.trajectory import Trajectory
from epikit.model.domain.control_vector import ControlVector
from epikit.model.domain.dynamics import controlled_field
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector


def running_cost(x: np.ndarray, w: np.ndarray, aw: ControlWeights) -> float:
    """Integrand of J at one instant."""
    return aw.a1 * x[2] + aw.a2 * x[3] + aw.a3 * w[0] ** 2 + aw.a4 * w[1] ** 2 + aw.a5 * w[2] ** 2


def hamiltonian_value(x: np.ndarray, psi: np.ndarray, w: np.ndarray, p: ParameterSet, aw: ControlWeights) -> float:
    return running_cost(x, w, aw) + float(np.dot(psi, controlled_field(x, p, w)))


def adjoint_field(psi: np.ndarray, x: np.ndarray, w: np.ndarray, p: ParameterSet, aw: ControlWeights) -> np.ndarray:
    """dpsi/dt = -dH/dx at one instant."""
    s, v, _, i, _, _ = x
    psi_s, psi_v, psi_e, psi_i, psi_r, psi_t = psi
    w1, w2, w3 = w
    beta1, beta2 = p.contact_exposed, p.contact_infected
    mu, phi = p.natural_death, p.vaccination_rate
    lam = p.vaccine_inefficiency
    kept = 1.0 - w1
    force = beta1 * x[2] + beta2 * i
    treatment = (1.0 + w2) * p.treatment
    recovery = (1.0 + w3) * p.recovery
    return np.array(
        [
            psi_s * (kept * force + mu + phi) - psi_v * phi - psi_e * kept * force,
            psi_v * (lam * force + mu) - psi_i * lam * force,
            -aw.a1
            + psi_s * kept * beta1 * s
            + psi_v * lam * beta1 * v
            - psi_e * (kept * beta1 * s - p.progression - mu)
            - psi_i * (p.progression + lam * beta1 * v),
            -aw.a2
            + psi_s * kept * beta2 * s
            + psi_v * lam * beta2 * v
            - psi_e * kept * beta2 * s
            - psi_i * (lam * beta2 * v - mu - p.disease_death - treatment - recovery)
            - psi_r * recovery
            - psi_t * treatment,
            psi_r * mu,
            psi_t * mu,
        ],
        dtype=np.float64,
    )


def control_drives(states: np.ndarray, adjoints: np.ndarray, p: ParameterSet) -> np.ndarray:
    """Numerators of the control law, row-wise for arrays of shape (n, 6).

    Returns columns (psiE - psiS) F S, (psiI - psiT) gamma1 I and (psiI - psiR) gamma I.
    """
    states = np.atleast_2d(states)
    adjoints = np.atleast_2d(adjoints)
    s, e, i = states[:, 0], states[:, 2], states[:, 3]
    force = p.contact_exposed * e + p.contact_infected * i
    return np.column_stack(
        [
            (adjoints[:, 2] - adjoints[:, 0]) * force * s,
            (adjoints[:, 3] - adjoints[:, 5]) * p.treatment * i,
            (adjoints[:, 3] - adjoints[:, 4]) * p.recovery * i,
        ]
    )


def optimality_candidates(states: np.ndarray, adjoints: np.ndarray, p: ParameterSet, aw: ControlWeights) -> np.ndarray:
    """Clamped minimisers of H, row-wise. Requires positive effort weights."""
    aw.require_positive_effort_weights()
    efforts = 2.0 * np.array([aw.a3, aw.a4, aw.a5])
    return np.clip(control_drives(states, adjoints, p) / efforts, 0.0, 1.0)


def control_gradient_field(
    states: np.ndarray, adjoints: np.ndarray, controls: np.ndarray, aw: ControlWeights, p: ParameterSet
) -> np.ndarray:
    """dH/dw row-wise: 2 a_j w_i minus the corresponding drive."""
    efforts = 2.0 * np.array([aw.a3, aw.a4, aw.a5])
    return efforts * np.atleast_2d(controls) - control_drives(states, adjoints, p)


def objective(states: Trajectory, controls: ControlSchedule, aw: ControlWeights) -> float:
    """J by the composite trapezoidal rule on the shared grid.

    Raises:
        GridMismatchException: If states and controls live on different grids.
    """
    if states.grid != controls.grid:
        raise GridMismatchException(expected=states.grid, actual=controls.grid)
    x = np.asarray(states.values)
    w = np.asarray(controls.values)
    integrand = aw.a1 * x[:, 2] + aw.a2 * x[:, 3] + aw.a3 * w[:, 0] ** 2 + aw.a4 * w[:, 1] ** 2 + aw.a5 * w[:, 2] ** 2
    return float(trapezoid(integrand, x=states.times))


def hamiltonian(x: StateVector, psi: AdjointVector, w: ControlVector, p: ParameterSet, aw: ControlWeights) -> float:
    """Value of H in cost per week."""
    return hamiltonian_value(x.to_array(), psi.to_array(), w.to_array(), p, aw)


def adjoint_rhs(
    psi: AdjointVector, x: StateVector, w: ControlVector, p: ParameterSet, aw: ControlWeights
) -> AdjointVector:
    """Time derivative of the costates, -dH/dx."""
    return AdjointVector.from_array(adjoint_field(psi.to_array(), x.to_array(), w.to_array(), p, aw))


def optimality_update(x: StateVector, psi: AdjointVector, p: ParameterSet, aw: ControlWeights) -> ControlVector:
    """Pointwise optimal controls for given state and costates.

    Raises:
        ZeroEffortWeightException: If a3, a4 or a5 is zero.
    """
    return ControlVector.from_array(optimality_candidates(x.to_array(), psi.to_array(), p, aw)[0])


def control_gradient(
    x: StateVector, psi: AdjointVector, w: ControlVector, p: ParameterSet, aw: ControlWeights
) -> np.ndarray:
    """dH/dw at one instant, as (dH/dw1, dH/dw2, dH/dw3)."""
    return control_gradient_field(x.to_array(), psi.to_array(), w.to_array(), aw, p)[0]
