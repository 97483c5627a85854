from epikit.config.domain.exceptions.config_exception_codes import ConfigExceptionCodes
from epikit.config.domain.exceptions.configuration_exception import ConfigurationException
from epikit.config.domain.exceptions.incidence_parse_exception import IncidenceParseException
from epikit.config.domain.exceptions.incidence_validation_exception import IncidenceValidationException
from epikit.config.domain.exceptions.unknown_command_exception import UnknownCommandException
from epikit.config.domain.exceptions.usage_exception import UsageException

__all__ = [
    "ConfigExceptionCodes",
    "ConfigurationException",
    "IncidenceParseException",
    "IncidenceValidationException",
    "UnknownCommandException",
    "UsageException",
]
