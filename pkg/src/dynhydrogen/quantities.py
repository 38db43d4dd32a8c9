"""Physical constants and unit conversions.

All values are SI and pinned to the CODATA 2018 recommended set so that
results do not drift with the installed scipy version. Coulomb terms that
are conventionally written as ``e**2 / r`` (Gaussian units) are evaluated
with :func:`gaussian_charge_squared`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

# CODATA 2018 snapshot
_H = 6.626_070_15e-34  # J s (exact)
_E = 1.602_176_634e-19  # C (exact)
_M_E = 9.109_383_7015e-31  # kg
_M_P = 1.672_621_923_69e-27  # kg
_EPS0 = 8.854_187_8128e-12  # F/m
_K_B = 1.380_649e-23  # J/K (exact)
_C = 299_792_458.0  # m/s (exact)
_G = 6.674_30e-11  # m^3 / (kg s^2)


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float
    h: float
    m_e: float
    m_p: float
    e: float
    eps0: float
    k_B: float
    c: float
    gamma_G: float
    ev: float

    def __post_init__(self):
        for name, value in vars(self).items():
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")


def _from_planck(h: float, **kw) -> PhysicalConstants:
    return PhysicalConstants(hbar=h / (2.0 * math.pi), h=h, **kw)


CODATA2018 = _from_planck(
    _H,
    m_e=_M_E,
    m_p=_M_P,
    e=_E,
    eps0=_EPS0,
    k_B=_K_B,
    c=_C,
    gamma_G=_G,
    ev=_E,
)


def gaussian_charge_squared(consts: PhysicalConstants = CODATA2018) -> float:
    """Return ``e**2 / (4 pi eps0)`` in J m."""
    return consts.e**2 / (4.0 * math.pi * consts.eps0)


def energy_convert(
    x: float,
    direction: Literal["ev_to_joule", "joule_to_ev"],
    consts: PhysicalConstants = CODATA2018,
) -> float:
    if direction == "ev_to_joule":
        return x * consts.ev
    if direction == "joule_to_ev":
        return x / consts.ev
    raise ValueError(f"unknown direction {direction!r}")


def ev_to_joule(x: float, consts: PhysicalConstants = CODATA2018) -> float:
    return x * consts.ev


def joule_to_ev(x: float, consts: PhysicalConstants = CODATA2018) -> float:
    return x / consts.ev
