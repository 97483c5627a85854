from epikit.calibration.application.fit_incidence.fit_incidence_command import FitIncidenceCommand
from epikit.calibration.application.fit_incidence.fit_incidence_handler import FitIncidenceHandler, FitOutcome

__all__ = ["FitIncidenceCommand", "FitIncidenceHandler", "FitOutcome"]
