from enum import Enum


class CommonExceptionCodes(str, Enum):
    VALIDATION_EXCEPTION = "validation_exception"
    INTERNAL_ERROR_EXCEPTION = "internal_error_exception"
    IO_EXCEPTION = "io_exception"
