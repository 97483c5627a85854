import logging
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from epikit.model.domain.dynamics import model_field
from epikit.model.domain.exceptions import DegenerateParameterException, EquilibriumCertificateException
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.reproduction_numbers import endemic_threshold
from epikit.model.domain.state_vector import StateVector
from epikit.shared.constants.tolerance_constants import EQUILIBRIUM_RESIDUAL_TOLERANCE

logger = logging.getLogger(__name__)

MAX_BRACKET_DOUBLINGS = 2000


def disease_free_equilibrium(p: ParameterSet) -> StateVector:
    """Stationary point of the model with E = I = 0.

    Returns:
        StateVector: (Lambda / (mu + phi), phi Lambda / (mu (mu + phi)), 0, 0, 0, 0).

    Raises:
        DegenerateParameterException: If mu is zero.
    """
    if not p.natural_death > 0.0:
        raise DegenerateParameterException(quantity="mu", values=p.to_symbols())
    depletion = p.natural_death + p.vaccination_rate
    susceptible = p.recruitment / depletion
    vaccinated = p.vaccination_rate * p.recruitment / (p.natural_death * depletion)
    return StateVector.from_array([susceptible, vaccinated, 0.0, 0.0, 0.0, 0.0])


def _state_for_force(force: float, p: ParameterSet) -> np.ndarray:
    """Back-substitute every compartment from the force of infection F = beta1 E + beta2 I."""
    mu = p.natural_death
    susceptible = p.recruitment / (mu + p.vaccination_rate + force)
    vaccinated = p.vaccination_rate * susceptible / (mu + p.vaccine_inefficiency * force)
    exposed = force * susceptible / p.exposed_exit_rate
    infected = (p.progression * exposed + p.vaccine_inefficiency * force * vaccinated) / p.infected_exit_rate
    return np.array(
        [susceptible, vaccinated, exposed, infected, p.recovery * infected / mu, p.treatment * infected / mu],
        dtype=np.float64,
    )


def _force_gap(force: float, p: ParameterSet) -> float:
    # Strictly decreasing in `force`; its positive root is the endemic force of infection.
    if force == 0.0:
        return endemic_threshold(p) - 1.0
    state = _state_for_force(force, p)
    return (p.contact_exposed * state[2] + p.contact_infected * state[3]) / force - 1.0


def endemic_equilibrium(p: ParameterSet) -> Optional[StateVector]:
    """Stationary point with strictly positive E and I, or None when there is none.

    The stationarity relations are reduced to one equation in the force of infection and solved by a
    bracketed root search; the result is certified by its residual.

    Raises:
        DegenerateParameterException: If mu is zero.
        EquilibriumCertificateException: If the residual check fails.
    """
    if not p.natural_death > 0.0:
        raise DegenerateParameterException(quantity="mu", values=p.to_symbols())
    if endemic_threshold(p) <= 1.0:
        return None

    upper = max(p.natural_death + p.vaccination_rate, 1.0)
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if _force_gap(upper, p) < 0.0:
            break
        upper *= 2.0
    force = brentq(_force_gap, 0.0, upper, args=(p,), xtol=np.finfo(float).tiny, rtol=4 * np.finfo(float).eps)
    state = _state_for_force(force, p)
    if not (state[2] > 0.0 and state[3] > 0.0):
        return None

    residual = float(np.max(np.abs(model_field(state, p))))
    tolerance = EQUILIBRIUM_RESIDUAL_TOLERANCE * p.recruitment
    if residual >= tolerance:
        raise EquilibriumCertificateException(residual=residual, tolerance=tolerance)
    logger.debug(
        "Endemic equilibrium certified",
        extra={"context": {"force_of_infection": force, "residual": residual}},
    )
    return StateVector.from_array(state)
