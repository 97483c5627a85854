# Relative undershoot tolerated by the positivity check (RK4 is not positivity preserving).
POSITIVITY_TOLERANCE = 1e-9
# Relative slack on the comparison bound N(t) <= max(N(0), Lambda / mu).
POPULATION_BOUND_TOLERANCE = 1e-9
# The endemic equilibrium is accepted when ||rhs||_inf < EQUILIBRIUM_RESIDUAL_TOLERANCE * Lambda.
EQUILIBRIUM_RESIDUAL_TOLERANCE = 1e-8
# Rates closer than this (relative) are treated as equal by the generation-interval density.
EQUAL_RATES_TOLERANCE = 1e-9
# PRCC significance rule.
PRCC_SIGNIFICANCE_THRESHOLD = 0.5
PRCC_SIGNIFICANCE_LEVEL = 0.05
