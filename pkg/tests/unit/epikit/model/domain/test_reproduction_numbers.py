from fractions import Fraction

import pytest

from epikit.model.domain.exceptions import DegenerateParameterException
from epikit.model.domain.parameter_set import ParameterSet
from epikit.model.domain.reproduction_numbers import endemic_threshold, r0_with_control, r0_without_control
from epikit.model.infrastructure.preset_repository import available_presets, load_country_preset


def _exact(p: ParameterSet) -> dict:
    return {key: Fraction(value) for key, value in p.to_symbols().items()}


def _r0_oracle(p: ParameterSet) -> Fraction:
    q = _exact(p)
    b2 = q["gamma"] + q["gamma1"] + q["mu"] + q["delta"]
    s0 = q["Lambda"] / (q["mu"] + q["phi"])
    return s0 * (q["alpha"] * q["beta2"] + q["beta1"] * b2) / ((q["alpha"] + q["mu"]) * b2)


def _r0v_oracle(p: ParameterSet, population: Fraction) -> Fraction:
    q = _exact(p)
    b2 = q["mu"] + q["delta"] + q["gamma"] + q["gamma1"]
    a2 = q["mu"] + q["phi"]
    first = q["mu"] * population * (q["alpha"] * q["beta2"] + q["beta1"] * b2) / (a2 * (q["alpha"] + q["mu"]) * b2)
    second = population * q["phi"] * q["beta2"] * (1 - q["epsilon"]) / (a2 * b2)
    return first + second


class TestR0WithoutControl:
    """Test the basic reproduction number."""

    @pytest.mark.parametrize("preset", ["mexico", "italy", "south_africa"])
    def test_r0_with_preset_should_match_exact_arithmetic(self, preset: str) -> None:
        # Arrange
        p = load_country_preset(preset).parameters

        # Act
        value = r0_without_control(p)

        # Assert
        assert value == pytest.approx(float(_r0_oracle(p)), rel=1e-12)

    def test_r0_without_transmission_should_be_zero(self, mexico: ParameterSet) -> None:
        # Act
        value = r0_without_control(mexico.with_overrides({"beta1": 0.0, "beta2": 0.0}))

        # Assert
        assert value == 0.0

    def test_r0_with_scaled_contact_rates_should_scale_linearly(self, mexico: ParameterSet) -> None:
        # Arrange
        scaled = mexico.with_overrides({"beta1": 3.0 * mexico.contact_exposed, "beta2": 3.0 * mexico.contact_infected})

        # Act
        ratio = r0_without_control(scaled) / r0_without_control(mexico)

        # Assert
        assert ratio == pytest.approx(3.0, rel=1e-12)

    def test_r0_with_vanishing_depletion_should_raise_degenerate_parameter(self, mexico: ParameterSet) -> None:
        # Arrange
        p = mexico.with_overrides({"mu": 0.0, "phi": 0.0})

        # Act & Assert
        with pytest.raises(DegenerateParameterException):
            r0_without_control(p)

    def test_bundled_presets_should_be_listed(self) -> None:
        # Act & Assert
        assert available_presets() == ["italy", "mexico", "south_africa"]


class TestR0WithControl:
    """Test the reproduction number under vaccination."""

    @pytest.mark.parametrize("preset", ["mexico", "italy", "south_africa"])
    def test_r0_with_control_at_demographic_population_should_match_exact_arithmetic(self, preset: str) -> None:
        # Arrange
        p = load_country_preset(preset).parameters
        population = Fraction(p.recruitment) / Fraction(p.natural_death)

        # Act
        value = r0_with_control(p, float(population))

        # Assert
        assert value == pytest.approx(float(_r0v_oracle(p, population)), rel=1e-12)

    def test_r0_with_control_without_transmission_should_be_zero(self, mexico: ParameterSet) -> None:
        # Act & Assert
        assert r0_with_control(mexico.with_overrides({"beta1": 0.0, "beta2": 0.0}), 10000.0) == 0.0

    def test_r0_with_perfect_vaccine_should_drop_vaccinated_term(self, mexico: ParameterSet) -> None:
        # Arrange
        p = mexico.with_overrides({"epsilon": 1.0})
        q = _exact(p)
        b2 = q["mu"] + q["delta"] + q["gamma"] + q["gamma1"]
        transmission = q["alpha"] * q["beta2"] + q["beta1"] * b2
        first_only = q["mu"] * 10000 * transmission / ((q["mu"] + q["phi"]) * (q["alpha"] + q["mu"]) * b2)

        # Act
        value = r0_with_control(p, 10000.0)

        # Assert
        assert value == pytest.approx(float(first_only), rel=1e-12)

    def test_r0_with_control_with_non_positive_population_should_raise_degenerate_parameter(
        self, mexico: ParameterSet
    ) -> None:
        # Act & Assert
        with pytest.raises(DegenerateParameterException):
            r0_with_control(mexico, 0.0)


class TestEndemicThreshold:
    """Test the endemic existence threshold."""

    def test_endemic_threshold_without_vaccination_should_equal_r0(self, mexico: ParameterSet) -> None:
        # Arrange
        p = mexico.with_overrides({"phi": 0.0})

        # Act & Assert
        assert endemic_threshold(p) == pytest.approx(r0_without_control(p), rel=1e-12)

    def test_endemic_threshold_with_perfect_vaccine_should_equal_r0(self, mexico: ParameterSet) -> None:
        # Arrange
        p = mexico.with_overrides({"epsilon": 1.0})

        # Act & Assert
        assert endemic_threshold(p) == pytest.approx(r0_without_control(p), rel=1e-12)

    def test_endemic_threshold_with_zero_mu_should_raise_degenerate_parameter(self, mexico: ParameterSet) -> None:
        # Act & Assert
        with pytest.raises(DegenerateParameterException):
            endemic_threshold(mexico.with_overrides({"mu": 0.0}))
