from enum import Enum


class IntegrationExceptionCodes(str, Enum):
    NON_FINITE_STATE = "non_finite_state"
    GRID_MISMATCH = "grid_mismatch"
