"""Bundled weekly incidence.

`mexico_synthetic_weekly.csv` is model output: Mexico rates with beta1 = 0.0045 from the default initial state,
10 RK4 steps per week, each count scaled by a +/-6% deterministic ripple and rounded. The default `fit` settings
recover beta1 from it.
"""
