import numpy as np
import pytest
from pydantic import ValidationError
from scipy.integrate import quad

from epikit.epimetrics.domain.exceptions import NegativeTimeException
from epikit.epimetrics.domain.generation_interval import GenerationInterval
from epikit.epimetrics.domain.renewal import (
    generation_interval_bin_masses,
    generation_interval_cdf,
    generation_interval_density,
)
from epikit.model.domain.parameter_set import ParameterSet

INTERVALS = [GenerationInterval(b1=0.8, b2=1.25), GenerationInterval(b1=1.0, b2=1.0)]


class TestGenerationInterval:
    """Test the two-stage generation-interval distribution."""

    def test_from_parameters_should_use_exit_rates(self, mexico: ParameterSet) -> None:
        # Act
        gi = GenerationInterval.from_parameters(mexico)

        # Assert
        assert gi.b1 == pytest.approx(0.8, rel=1e-12)
        assert gi.b2 == pytest.approx(1.25, rel=1e-12)
        assert gi.mean == pytest.approx(1.25 + 0.8, rel=1e-12)
        assert not gi.has_equal_rates

    def test_create_with_zero_rate_should_raise_validation_error(self) -> None:
        # Act & Assert
        with pytest.raises(ValidationError):
            GenerationInterval(b1=0.0, b2=1.0)

    @pytest.mark.parametrize("gi", INTERVALS)
    def test_density_at_zero_should_vanish(self, gi: GenerationInterval) -> None:
        # Act & Assert
        assert generation_interval_density(gi, 0.0) == 0.0

    @pytest.mark.parametrize("gi", INTERVALS)
    def test_density_should_integrate_to_one_with_expected_mean(self, gi: GenerationInterval) -> None:
        # Act
        total, _ = quad(lambda t: generation_interval_density(gi, t), 0.0, np.inf)
        mean, _ = quad(lambda t: t * generation_interval_density(gi, t), 0.0, np.inf)

        # Assert
        assert total == pytest.approx(1.0, abs=1e-8)
        assert mean == pytest.approx(gi.mean, rel=1e-8)

    def test_nearly_equal_rates_should_match_erlang_limit(self) -> None:
        # Arrange
        close = GenerationInterval(b1=1.0, b2=1.0 + 1e-12)

        # Act & Assert
        assert close.has_equal_rates
        assert generation_interval_density(close, 2.0) == pytest.approx(2.0 * np.exp(-2.0), rel=1e-9)

    @pytest.mark.parametrize("gi", INTERVALS)
    def test_bin_masses_should_match_integrated_density(self, gi: GenerationInterval) -> None:
        # Act
        masses = generation_interval_bin_masses(gi, 6)

        # Assert
        for week, mass in enumerate(masses, start=1):
            expected, _ = quad(lambda t: generation_interval_density(gi, t), week - 1.0, float(week))
            assert mass == pytest.approx(expected, rel=1e-9)
        assert generation_interval_cdf(gi, np.array([0.0]))[0] == pytest.approx(0.0, abs=1e-15)

    def test_density_before_zero_should_raise_negative_time(self) -> None:
        # Act & Assert
        with pytest.raises(NegativeTimeException):
            generation_interval_density(INTERVALS[0], -0.5)
