import pytest

from epikit.calibration.domain.incidence_model import model_weekly_incidence
from epikit.calibration.domain.incidence_series import IncidenceSeries
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector


@pytest.fixture
def synthetic_series(mexico: ParameterSet, initial_state: StateVector) -> IncidenceSeries:
    """Thirty weeks of model incidence under the Mexico preset."""
    return IncidenceSeries.from_counts(model_weekly_incidence(mexico, initial_state, 30))


@pytest.fixture
def season_series(mexico: ParameterSet, initial_state: StateVector) -> IncidenceSeries:
    """Eighty-five weeks of model incidence under the Mexico preset."""
    return IncidenceSeries.from_counts(model_weekly_incidence(mexico, initial_state, 85))
