from epikit.shared.exceptions.artifact_write_exception import ArtifactWriteException
from epikit.shared.exceptions.common_exception_codes import CommonExceptionCodes
from epikit.shared.exceptions.domain_exception import DomainException

__all__ = [
    "DomainException",
    "CommonExceptionCodes",
    "ArtifactWriteException",
]
