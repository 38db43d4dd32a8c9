"""Standard and dynamic models of the hydrogen atom."""

from .dynamic import CalibratedModel, RadialMode, calibrate, radial_mode
from .emission import DecayConfig, EmissionLine, decay_config, line_frequency
from .quantities import CODATA2018, PhysicalConstants

__all__ = [
    "CODATA2018",
    "CalibratedModel",
    "DecayConfig",
    "EmissionLine",
    "PhysicalConstants",
    "RadialMode",
    "calibrate",
    "decay_config",
    "line_frequency",
    "radial_mode",
]
