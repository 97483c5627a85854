from epikit.model.domain.exceptions.degenerate_parameter_exception import DegenerateParameterException
from epikit.model.domain.exceptions.equilibrium_certificate_exception import EquilibriumCertificateException
from epikit.model.domain.exceptions.invalid_preset_exception import InvalidPresetException
from epikit.model.domain.exceptions.model_exception_codes import ModelExceptionCodes
from epikit.model.domain.exceptions.preset_not_found_exception import PresetNotFoundException
from epikit.model.domain.exceptions.zero_reproduction_number_exception import ZeroReproductionNumberException

__all__ = [
    "ModelExceptionCodes",
    "DegenerateParameterException",
    "ZeroReproductionNumberException",
    "PresetNotFoundException",
    "InvalidPresetException",
    "EquilibriumCertificateException",
]
