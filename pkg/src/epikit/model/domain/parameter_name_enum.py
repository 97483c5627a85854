from enum import Enum


class ParameterNameEnum(str, Enum):
    """Names of the model rates, spelled as in preset files.

    `LAMBDA` is recruitment. `VACCINE_INEFFICIENCY` is the derived lambda = 1 - epsilon.
    """

    LAMBDA = "Lambda"
    BETA1 = "beta1"
    BETA2 = "beta2"
    PHI = "phi"
    ALPHA = "alpha"
    GAMMA = "gamma"
    GAMMA1 = "gamma1"
    MU = "mu"
    DELTA = "delta"
    EPSILON = "epsilon"
    VACCINE_INEFFICIENCY = "lambda"
