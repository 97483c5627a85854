from epikit.model.domain.compartment_vector import COMPARTMENTS, CompartmentVector
from epikit.model.domain.control_vector import ControlVector
from epikit.model.domain.country_preset import CountryPreset
from epikit.model.domain.dynamics import base_rhs, controlled_field, controlled_rhs, force_of_infection, model_field
from epikit.model.domain.equilibria import disease_free_equilibrium, endemic_equilibrium
from epikit.model.domain.local_sensitivity import (
    local_sensitivity_index,
    numerical_sensitivity_index,
    sensitivity_indices,
)
from epikit.model.domain.parameter_name_enum import ParameterNameEnum
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.reproduction_numbers import endemic_threshold, r0_with_control, r0_without_control
from epikit.model.domain.state_derivative import StateDerivative
from epikit.model.domain.state_vector import StateVector

__all__ = [
    "COMPARTMENTS",
    "CompartmentVector",
    "ControlVector",
    "CountryPreset",
    "ParameterNameEnum",
    "ParameterSet",
    "StateDerivative",
    "StateVector",
    "base_rhs",
    "controlled_field",
    "controlled_rhs",
    "force_of_infection",
    "model_field",
    "disease_free_equilibrium",
    "endemic_equilibrium",
    "endemic_threshold",
    "r0_with_control",
    "r0_without_control",
    "local_sensitivity_index",
    "numerical_sensitivity_index",
    "sensitivity_indices",
]
