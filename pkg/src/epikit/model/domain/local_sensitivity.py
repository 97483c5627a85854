"""Normalised sensitivity indices (elasticities) of R0, (dR0/dP) * (P / R0)."""

from typing import Dict, Union

from epikit.model.domain.exceptions import ZeroReproductionNumberException
from epikit.model.domain.parameter_name_enum import ParameterNameEnum
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.reproduction_numbers import r0_without_control

UNIT_INTERVAL_PARAMETERS = (ParameterNameEnum.EPSILON, ParameterNameEnum.VACCINE_INEFFICIENCY)


def local_sensitivity_index(p: ParameterSet, which: Union[ParameterNameEnum, str]) -> float:
    """Analytic elasticity of `r0_without_control` with respect to one parameter.

    R0 factors as S0 * Q with S0 = Lambda / (mu + phi) and Q = alpha beta2 / (a1 b2) + beta1 / a1,
    where a1 = alpha + mu and b2 = mu + delta + gamma + gamma1.

    Raises:
        ZeroReproductionNumberException: If R0 is zero.
        DegenerateParameterException: If R0 itself is undefined.
    """
    name = ParameterNameEnum(which)
    if r0_without_control(p) == 0.0:
        raise ZeroReproductionNumberException(parameter=name.value)

    a1 = p.exposed_exit_rate
    b2 = p.infected_exit_rate
    depletion = p.natural_death + p.vaccination_rate
    infected_route = p.progression * p.contact_infected / (a1 * b2)
    exposed_route = p.contact_exposed / a1
    q = infected_route + exposed_route
    # dQ/db2, shared by every rate that only enters through b2
    dq_db2 = -infected_route / b2

    if name is ParameterNameEnum.LAMBDA:
        return 1.0
    if name is ParameterNameEnum.PHI:
        return -p.vaccination_rate / depletion
    if name is ParameterNameEnum.BETA1:
        return exposed_route / q
    if name is ParameterNameEnum.BETA2:
        return infected_route / q
    if name is ParameterNameEnum.ALPHA:
        dq_dalpha = p.contact_infected * p.natural_death / (a1 * a1 * b2) - p.contact_exposed / (a1 * a1)
        return p.progression * dq_dalpha / q
    if name is ParameterNameEnum.GAMMA:
        return p.recovery * dq_db2 / q
    if name is ParameterNameEnum.GAMMA1:
        return p.treatment * dq_db2 / q
    if name is ParameterNameEnum.DELTA:
        return p.disease_death * dq_db2 / q
    if name is ParameterNameEnum.MU:
        dq_dmu = -q / a1 + dq_db2
        return p.natural_death * (-1.0 / depletion + dq_dmu / q)
    # epsilon and lambda do not enter R0 without control
    return 0.0


def numerical_sensitivity_index(
    p: ParameterSet, which: Union[ParameterNameEnum, str], relative_step: float = 1e-6
) -> float:
    """Central finite-difference estimate of `local_sensitivity_index`."""
    name = ParameterNameEnum(which)
    base = r0_without_control(p)
    if base == 0.0:
        raise ZeroReproductionNumberException(parameter=name.value)
    value = p.value_of(name)
    if value == 0.0:
        return 0.0
    step = relative_step * abs(value)
    high, low = value + step, value - step
    if name in UNIT_INTERVAL_PARAMETERS:
        high, low = min(high, 1.0), max(low, 0.0)
    upper = r0_without_control(p.with_overrides({name: high}))
    lower = r0_without_control(p.with_overrides({name: low}))
    return (upper - lower) / (high - low) * value / base


def sensitivity_indices(p: ParameterSet) -> Dict[str, float]:
    """Analytic elasticity for every named parameter, keyed by symbol."""
    return {name.value: local_sensitivity_index(p, name) for name in ParameterNameEnum}
