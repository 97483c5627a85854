"""
EpiKit - Simulation, optimal control, calibration and sensitivity analysis for the SVEIRT influenza model.

This package exposes the model as a library and as the `epk` batch command-line tool emitting plot-ready data.
"""

__version__ = "0.1.0"
