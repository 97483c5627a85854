import numpy as np
import pytest

from epikit.model.domain.control_vector import ControlVector
from epikit.model.domain.dynamics import base_rhs, controlled_field, controlled_rhs, model_field
from epikit.model.domain.equilibria import disease_free_equilibrium
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.state_vector import StateVector

STATE = (400.0, 50.0, 10.0, 5.0, 0.0, 0.0)


def _hand_evaluated(p: ParameterSet, w1: float, w2: float, w3: float) -> list:
    s, v, e, i, r, t = STATE
    lam, b1, b2, phi, alpha = 500.0, 0.0055, 0.0055, 0.1, 0.75
    gamma, gamma1, mu, delta, eps = 0.65, 0.25, 0.05, 0.3, 0.45
    force = b1 * e + b2 * i
    return [
        lam - (1 - w1) * force * s - (mu + phi) * s,
        phi * s - (1 - eps) * force * v - mu * v,
        (1 - w1) * force * s - (alpha + mu) * e,
        alpha * e + (1 - eps) * force * v - (mu + delta) * i - (1 + w2) * gamma1 * i - (1 + w3) * gamma * i,
        (1 + w3) * gamma * i - mu * r,
        (1 + w2) * gamma1 * i - mu * t,
    ]


class TestBaseRhs:
    """Test the uncontrolled right-hand side."""

    def test_base_rhs_at_empty_state_should_return_recruitment_only(self, mexico: ParameterSet) -> None:
        # Arrange
        state = StateVector.from_array(np.zeros(6))

        # Act
        derivative = base_rhs(state, mexico)

        # Assert
        assert derivative.to_array().tolist() == [500.0, 0.0, 0.0, 0.0, 0.0, 0.0]

    def test_base_rhs_at_disease_free_equilibrium_should_vanish(self, mexico: ParameterSet) -> None:
        # Act
        derivative = base_rhs(disease_free_equilibrium(mexico), mexico)

        # Assert
        assert np.max(np.abs(derivative.to_array())) < 1e-10

    def test_base_rhs_with_generic_state_should_match_hand_evaluation(self, mexico: ParameterSet) -> None:
        # Act
        derivative = base_rhs(StateVector.from_array(STATE), mexico).to_array()

        # Assert
        assert derivative.tolist() == pytest.approx(_hand_evaluated(mexico, 0.0, 0.0, 0.0), rel=1e-12, abs=1e-12)

    def test_total_derivative_should_equal_recruitment_minus_deaths(self, mexico: ParameterSet) -> None:
        # Arrange
        state = StateVector.from_array(STATE)

        # Act
        total = base_rhs(state, mexico).total

        # Assert
        expected = 500.0 - 0.05 * state.total - 0.3 * 5.0
        assert total == pytest.approx(expected, rel=1e-12)


class TestControlledRhs:
    """Test the controlled right-hand side."""

    def test_controlled_rhs_with_zero_control_should_equal_base_rhs(self, mexico: ParameterSet) -> None:
        # Arrange
        state = StateVector.from_array(STATE)

        # Act
        controlled = controlled_rhs(state, mexico, ControlVector())

        # Assert
        assert controlled == base_rhs(state, mexico)

    def test_controlled_rhs_with_full_contact_reduction_should_stop_new_exposures(self, mexico: ParameterSet) -> None:
        # Arrange
        state = StateVector.from_array(STATE)

        # Act
        derivative = controlled_rhs(state, mexico, ControlVector(w1=1.0))

        # Assert
        assert derivative.exposed == pytest.approx(-(0.75 + 0.05) * 10.0, rel=1e-15)

    def test_controlled_rhs_with_generic_control_should_match_hand_evaluation(self, mexico: ParameterSet) -> None:
        # Act
        derivative = controlled_rhs(StateVector.from_array(STATE), mexico, ControlVector.constant(0.45)).to_array()

        # Assert
        assert derivative.tolist() == pytest.approx(_hand_evaluated(mexico, 0.45, 0.45, 0.45), rel=1e-12, abs=1e-12)

    def test_array_fields_should_agree_with_value_object_wrappers(self, mexico: ParameterSet) -> None:
        # Arrange
        x = np.array(STATE)

        # Act & Assert
        np.testing.assert_array_equal(model_field(x, mexico), controlled_field(x, mexico))
        np.testing.assert_array_equal(
            controlled_field(x, mexico, np.array([0.2, 0.3, 0.4])),
            controlled_rhs(StateVector.from_array(STATE), mexico, ControlVector(w1=0.2, w2=0.3, w3=0.4)).to_array(),
        )


class TestControlVector:
    """Test ControlVector clamping."""

    def test_create_control_vector_out_of_range_should_clamp(self) -> None:
        # Act
        control = ControlVector(w1=-0.5, w2=1.7, w3=0.3)

        # Assert
        assert control.to_array().tolist() == [0.0, 1.0, 0.3]

    def test_create_control_vector_with_nan_should_raise_value_error(self) -> None:
        # Act & Assert
        with pytest.raises(ValueError):
            ControlVector(w1=float("nan"))
