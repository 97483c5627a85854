from epikit.model.domain.compartment_vector import CompartmentVector


class StateDerivative(CompartmentVector):
    """Time derivative of a `StateVector`, in persons per week. Components may be negative."""

    @property
    def total(self) -> float:
        return float(self.to_array().sum())
