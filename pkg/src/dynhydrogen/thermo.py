"""Boltzmann statistics of excitation levels.

The level energy is the positive cycle-averaged electron energy
``|E0| / n^2`` of the dynamic model, so the factor approaches 1 toward the
inert state ``n -> infinity`` and is smallest at ``n = 1``. Factors are not
normalized over levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamic import CalibratedModel
from .quantities import CODATA2018, PhysicalConstants

FIGURE_TEMPERATURES = (293.0, 1273.0, 2273.0)
DEFAULT_LO = 0.01
DEFAULT_HI = 0.95


@dataclass(frozen=True)
class ExcitationDistribution:
    temperature: float
    levels: np.ndarray  # n = 1..n_max
    factors: np.ndarray

    def __iter__(self):
        return iter(zip(self.levels.tolist(), self.factors.tolist()))


def _check_temperature(T: float) -> None:
    if not T > 0:
        raise ValueError(f"temperature must be positive, got {T}")


def excitation_probability(
    model: CalibratedModel, n, T: float, consts: PhysicalConstants = CODATA2018
):
    """Boltzmann factor ``exp(-|E0| / (n^2 k_B T))`` of level ``n``."""
    _check_temperature(T)
    n = np.asarray(n, dtype=float)
    if np.any(n < 1):
        raise ValueError("n must be >= 1")
    f = np.exp(-abs(model.E0) / (n * n * consts.k_B * T))
    return f.item() if f.ndim == 0 else f


def distribution_table(
    model: CalibratedModel, T: float, n_max: int = 200, consts: PhysicalConstants = CODATA2018
) -> ExcitationDistribution:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    levels = np.arange(1, n_max + 1)
    return ExcitationDistribution(
        temperature=T, levels=levels, factors=excitation_probability(model, levels, T, consts)
    )


def transition_band(
    model: CalibratedModel,
    T: float,
    lo_threshold: float = DEFAULT_LO,
    hi_threshold: float = DEFAULT_HI,
    consts: PhysicalConstants = CODATA2018,
) -> tuple[int, int]:
    """Smallest levels whose factor reaches ``lo_threshold`` and ``hi_threshold``.

    Solved in closed form from the monotone factor and then nudged by one
    level to absorb rounding at exact ties.
    """
    if not 0 < lo_threshold < hi_threshold < 1:
        raise ValueError("thresholds must satisfy 0 < lo < hi < 1")
    _check_temperature(T)

    def first_level(p: float) -> int:
        n = max(1, math.ceil(math.sqrt(abs(model.E0) / (-math.log(p) * consts.k_B * T))))
        while n > 1 and excitation_probability(model, n - 1, T, consts) >= p:
            n -= 1
        while excitation_probability(model, n, T, consts) < p:
            n += 1
        return n

    return first_level(lo_threshold), first_level(hi_threshold)
