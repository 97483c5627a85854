import pytest

from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector
from epikit.model.infrastructure.preset_repository import load_country_preset


@pytest.fixture
def mexico() -> ParameterSet:
    return load_country_preset("mexico").parameters


@pytest.fixture
def initial_state() -> StateVector:
    return StateVector.from_array([500.0, 1.0, 1.0, 0.0, 0.0, 0.0])
