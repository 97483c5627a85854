"""Typed form of a run configuration file.

A configuration is a YAML mapping with one section per command plus `output_dir` and `seed`. Every field has a
default, so an empty file (or no file) runs the Mexico preset.
"""

from pathlib import Path
from typing import Annotated, Any, ClassVar, Dict, Optional, Tuple

from pydantic import ConfigDict, Field, model_validator

from epikit.calibration.domain.fit_target_enum import FitTargetEnum
from epikit.calibration.domain.incidence_model import DEFAULT_STEPS_PER_WEEK
from epikit.control.domain.control_weights import ControlWeights
from epikit.control.domain.sweep_settings import SweepSettings
from epikit.model.domain.state_vector import StateVector
from epikit.sensitivity.domain.sensitivity_output_enum import SensitivityOutputEnum
from epikit.shared import BaseValue
from epikit.shared.custom_types import NaturalNumber, PositiveFloat, PositiveInteger

DEFAULT_PRESET = "mexico"
DEFAULT_OUTPUT_DIR = "out"
DEFAULT_INITIAL_STATE: Dict[str, float] = {"S": 500.0, "V": 1.0, "E": 1.0, "I": 0.0, "R": 0.0, "T": 0.0}

RateInterval = Tuple[float, float]


class ConfigSection(BaseValue):
    model_config: ClassVar[ConfigDict] = ConfigDict(**BaseValue.model_config, extra="forbid")


class ModelSection(ConfigSection):
    """Where the rates come from: exactly one of a bundled preset, a parameter file or inline values."""

    preset: Annotated[Optional[str], Field(examples=["mexico", "italy", "south_africa"])] = None
    parameters_file: Optional[Path] = None
    parameters: Annotated[Optional[Dict[str, float]], Field(examples=[{"Lambda": 500.0, "beta1": 0.0055}])] = None
    overrides: Annotated[
        Dict[str, float],
        Field(default_factory=dict, description="Rates replaced after loading.", examples=[{"phi": 0.1}]),
    ]

    @model_validator(mode="before")
    @classmethod
    def _default_source(cls, data: Any) -> Any:
        if isinstance(data, dict) and all(data.get(key) is None for key in ("preset", "parameters_file", "parameters")):
            return {**data, "preset": DEFAULT_PRESET}
        return data

    @model_validator(mode="after")
    def _check_single_source(self) -> "ModelSection":
        sources = [key for key in ("preset", "parameters_file", "parameters") if getattr(self, key) is not None]
        if len(sources) != 1:
            raise ValueError(f"exactly one of preset, parameters_file and parameters must be set, got {sources}")
        return self

    @property
    def source_name(self) -> str:
        if self.preset is not None:
            return self.preset
        if self.parameters_file is not None:
            return self.parameters_file.stem
        return "inline"


class SimulationSection(ConfigSection):
    initial_state: StateVector = StateVector.model_validate(DEFAULT_INITIAL_STATE)
    t0: Annotated[float, Field(allow_inf_nan=False)] = 0.0
    weeks: Annotated[PositiveFloat, Field(description="Horizon length in weeks.")] = 120.0
    step: Annotated[PositiveFloat, Field(description="RK4 step h in weeks.")] = 0.1


class ControlSection(ConfigSection):
    weights: ControlWeights = ControlWeights()
    settings: SweepSettings = SweepSettings()
    weeks: PositiveFloat = 12.0
    step: PositiveFloat = 0.1
    scenario_file: Annotated[
        Optional[Path], Field(description="Extra scenarios; the bundled weight presets when omitted.")
    ] = None


class FitSection(ConfigSection):
    data: Annotated[Optional[Path], Field(description="Weekly incidence CSV; the bundled sample when omitted.")] = None
    free: Annotated[Tuple[str, ...], Field(min_length=1)] = ("beta1",)
    bounds: Dict[str, RateInterval] = Field(default_factory=lambda: {"beta1": (1e-4, 0.05)})
    target: FitTargetEnum = FitTargetEnum.CUMULATIVE
    window: Annotated[Optional[str], Field(description="Growth-regression weeks `a:b`.", examples=["0:20"])] = None
    degree: Optional[NaturalNumber] = None
    steps_per_week: PositiveInteger = DEFAULT_STEPS_PER_WEEK
    growth_scale: Optional[PositiveFloat] = None


class SensitivitySection(ConfigSection):
    n_samples: PositiveInteger = 100
    ranges: Annotated[
        Optional[Dict[str, RateInterval]], Field(description="Sampled rates; the default design when omitted.")
    ] = None
    output: SensitivityOutputEnum = SensitivityOutputEnum.R0
    intervals: Tuple[RateInterval, ...] = ((1.0, 2.0), (2.0, 3.0))
    bins: PositiveInteger = 10
    grid_x: Optional[str] = "beta1"
    grid_y: Optional[str] = "beta2"
    grid_resolution: Annotated[int, Field(ge=2)] = 50
    levels: Tuple[float, ...] = (1.5, 2.5, 3.5)
    max_workers: Optional[PositiveInteger] = None


class RtSection(ConfigSection):
    data: Optional[Path] = None
    b1_range: Optional[RateInterval] = None
    b2_range: Optional[RateInterval] = None
    resolution: Annotated[int, Field(ge=2)] = 5


class RunConfig(ConfigSection):
    """Everything one `epk` invocation needs, after defaults, file, environment and flags are merged."""

    model: ModelSection = ModelSection()
    simulation: SimulationSection = SimulationSection()
    control: ControlSection = ControlSection()
    fit: FitSection = FitSection()
    sensitivity: SensitivitySection = SensitivitySection()
    rt: RtSection = RtSection()
    output_dir: Path = Path(DEFAULT_OUTPUT_DIR)
    seed: Annotated[Optional[int], Field(ge=0, description="Seed of every random draw.")] = None

    def referenced_files(self) -> Dict[str, Path]:
        """Input files named by the configuration, keyed by their dotted setting."""
        candidates = {
            "model.parameters_file": self.model.parameters_file,
            "control.scenario_file": self.control.scenario_file,
            "fit.data": self.fit.data,
            "rt.data": self.rt.data,
        }
        return {key: path for key, path in candidates.items() if path is not None}
