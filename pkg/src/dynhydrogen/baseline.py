"""Standard Schroedinger-equation solution for hydrogen.

Covers the Bohr radius, the discrete energy ladder, the radial series
solution, closed forms of the three lowest eigenfunctions and the
position-dependent frequency obtained by applying the radial Hamiltonian
to the ground-state amplitude.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

from .quantities import CODATA2018, PhysicalConstants, gaussian_charge_squared

Variant = Literal["full", "mechanical"]
STATES = ("100", "200", "210")


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    n_prime: int
    l: int  # noqa: E741
    m_l: int = 0

    def __post_init__(self):
        if self.n < 1 or self.n_prime < 0 or self.l < 0:
            raise ValueError("quantum numbers out of range")
        if self.n != self.n_prime + self.l + 1:
            raise ValueError(f"n must equal n' + l + 1, got {self}")
        if abs(self.m_l) > self.l:
            raise ValueError(f"|m_l| must not exceed l, got {self}")

    @classmethod
    def from_label(cls, label: str) -> "QuantumNumbers":
        if label not in STATES:
            raise ValueError(f"unknown state {label!r}; expected one of {STATES}")
        n, l, m = (int(ch) for ch in label)
        return cls(n=n, n_prime=n - l - 1, l=l, m_l=m)


@dataclass(frozen=True)
class HydrogenEigenstate:
    qn: QuantumNumbers
    energy: float
    bohr_a: float
    omega: float


def bohr_radius(consts: PhysicalConstants = CODATA2018) -> float:
    return consts.hbar**2 / (consts.m_e * gaussian_charge_squared(consts))


def energy_level(n: int, consts: PhysicalConstants = CODATA2018) -> float:
    """Bound-state energy ``-(e^2/hbar)^2 m / (2 n^2)`` in joules."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    e2 = gaussian_charge_squared(consts)
    return -((e2 / consts.hbar) ** 2) * consts.m_e / (2.0 * n * n)


def eigenstate(label: str, consts: PhysicalConstants = CODATA2018) -> HydrogenEigenstate:
    qn = QuantumNumbers.from_label(label)
    energy = energy_level(qn.n, consts)
    return HydrogenEigenstate(
        qn=qn, energy=energy, bohr_a=bohr_radius(consts), omega=energy / consts.hbar
    )


def radial_series(n_prime: int, l: int, x: float) -> float:  # noqa: E741
    """Regular solution ``y_l(x)`` of the reduced radial equation.

    ``x = 2 r sqrt(-2 m E) / hbar``. The summand carries ``(-x)^p`` so the
    polynomial factor is a scaled associated Laguerre polynomial
    ``L_{n'}^{(2l+1)}(x)`` with leading coefficient 1 at ``x = 0``.
    """
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    if n_prime < 0 or l < 0:
        raise ValueError("n_prime and l must be non-negative")
    poly = 0.0
    for p in range(n_prime + 1):
        coeff = (
            math.factorial(n_prime)
            * math.factorial(2 * l + 1)
            / (
                math.factorial(n_prime - p)
                * math.factorial(2 * l + 1 + p)
                * math.factorial(p)
            )
        )
        poly += coeff * (-x) ** p
    return x ** (l + 1) * math.exp(-x / 2.0) * poly


def eval_wavefunction(
    state: str,
    r: float,
    theta: float = 0.0,
    t: float = 0.0,
    consts: PhysicalConstants = CODATA2018,
) -> complex:
    """Closed-form amplitude of state 100, 200 or 210 including ``exp(-i w_n t)``.

    All three carry the ``a**-1.5`` normalization factor. The 210 prefactor
    is ``1/sqrt(8 pi)`` so that every state integrates to one.
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    st = eigenstate(state, consts)
    a = st.bohr_a
    norm = a**-1.5
    if state == "100":
        spatial = 2.0 / math.sqrt(4.0 * math.pi) * norm * math.exp(-r / a)
    elif state == "200":
        spatial = norm / math.sqrt(8.0 * math.pi) * (1.0 - r / (2 * a)) * math.exp(-r / (2 * a))
    else:
        spatial = (
            norm / math.sqrt(8.0 * math.pi) * (r / (2 * a)) * math.exp(-r / (2 * a)) * math.cos(theta)
        )
    return spatial * cmath.exp(-1j * st.omega * t)


def local_frequency(
    r: float, variant: Variant = "full", consts: PhysicalConstants = CODATA2018
) -> float:
    """``hbar * omega(r)`` in joules for the ground-state amplitude.

    ``full`` keeps the Coulomb term in the 1/r coefficient; ``mechanical``
    drops it and treats the electrostatic potential as a modification of the
    wave only.
    """
    if r <= 0:
        raise ValueError(f"r must be positive, got {r}")
    a = bohr_radius(consts)
    coeff = _inverse_r_coefficient(variant, a, consts)
    return coeff / r - consts.hbar**2 / (2.0 * consts.m_e * a * a)


def _inverse_r_coefficient(variant: Variant, a: float, consts: PhysicalConstants) -> float:
    kinetic = 2.0 * consts.hbar**2 / (2.0 * consts.m_e * a)
    if variant == "full":
        return kinetic - gaussian_charge_squared(consts)
    if variant == "mechanical":
        return kinetic
    raise ValueError(f"unknown variant {variant!r}")


def frequency_zero_radius(variant: Variant = "full", consts: PhysicalConstants = CODATA2018) -> float:
    """Radius where ``omega(r)`` changes sign: ``(2 - 2) a`` or ``2 a``."""
    a = bohr_radius(consts)
    coeff = _inverse_r_coefficient(variant, a, consts)
    return coeff * 2.0 * consts.m_e * a * a / consts.hbar**2
