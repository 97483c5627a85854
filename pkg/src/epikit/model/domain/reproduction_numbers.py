from epikit.model.domain.exceptions import DegenerateParameterException
from epikit.model.domain.parameter_set import ParameterSet


def _require_positive(quantity: str, value: float, p: ParameterSet) -> None:
    if not value > 0.0:
        raise DegenerateParameterException(quantity=quantity, values=p.to_symbols())


def r0_without_control(p: ParameterSet) -> float:
    """Basic reproduction number in the absence of control.

    R0 = S0 [alpha beta2 + beta1 (gamma + gamma1 + mu + delta)] / ((alpha + mu)(gamma + gamma1 + delta + mu)),
    with S0 = Lambda / (mu + phi).

    Raises:
        DegenerateParameterException: If mu + phi, alpha + mu or gamma + gamma1 + delta + mu is zero.
    """
    depletion = p.natural_death + p.vaccination_rate
    _require_positive("mu + phi", depletion, p)
    _require_positive("alpha + mu", p.exposed_exit_rate, p)
    _require_positive("mu + delta + gamma + gamma1", p.infected_exit_rate, p)
    susceptible_at_dfe = p.recruitment / depletion
    transmission = p.progression * p.contact_infected + p.contact_exposed * p.infected_exit_rate
    return susceptible_at_dfe * transmission / (p.exposed_exit_rate * p.infected_exit_rate)


def r0_with_control(p: ParameterSet, population: float) -> float:
    """Reproduction number with vaccination, for a total population `population`.

    R0V = mu N [alpha beta2 + beta1 b2] / ((mu + phi)(alpha + mu) b2) + N phi beta2 lambda / ((mu + phi) b2),
    with b2 = mu + delta + gamma + gamma1 and lambda = 1 - epsilon.
    """
    if not population > 0.0:
        raise DegenerateParameterException(quantity="N", message="The population size must be positive.")
    depletion = p.natural_death + p.vaccination_rate
    _require_positive("mu + phi", depletion, p)
    _require_positive("alpha + mu", p.exposed_exit_rate, p)
    _require_positive("mu + delta + gamma + gamma1", p.infected_exit_rate, p)
    transmission = p.progression * p.contact_infected + p.contact_exposed * p.infected_exit_rate
    unvaccinated_part = (
        p.natural_death * population * transmission / (depletion * p.exposed_exit_rate * p.infected_exit_rate)
    )
    vaccinated_part = (
        population
        * p.vaccination_rate
        * p.contact_infected
        * p.vaccine_inefficiency
        / (depletion * p.infected_exit_rate)
    )
    return unvaccinated_part + vaccinated_part


def endemic_threshold(p: ParameterSet) -> float:
    """R0V at the demographic equilibrium population N = Lambda / mu.

    A strictly positive endemic equilibrium exists exactly when this exceeds one. It equals
    `r0_without_control` when vaccinated people cannot be infected (epsilon = 1) or nobody is vaccinated.
    """
    _require_positive("mu", p.natural_death, p)
    if p.recruitment == 0.0:
        return 0.0
    return r0_with_control(p, p.recruitment / p.natural_death)
