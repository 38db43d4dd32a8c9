"""Dynamic hydrogen model: radial electron standing waves coupled to an
oscillating nucleus through photon exchange.

The model has a single calibration input, the ionization energy ``E0`` at
the highest excitation ``n = 1``. Everything else (the radial speed scale
``v0 = nu0 R0``, the atomic radius ``R0`` and the resonance frequency
``nu0``) follows from it. Note the reversed energy scale: small ``n`` is
high excitation and the inert ground state sits at ``n -> infinity``.

Field functions accept scalars or numpy arrays for ``r`` and ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from .quantities import CODATA2018, PhysicalConstants, ev_to_joule

DEFAULT_E0_EV = 13.598
# proton charge radius scale
DEFAULT_R_N = 0.88e-15
# value printed for the gravitational branch; not reproduced by direct substitution
PRINTED_K_GRAV = 4.70e-63

# reference densities of hydrogen, g per litre
REFERENCE_DENSITY_G_PER_L = {"gas": 0.0899, "liquid": 70.7}

Coupling = Literal["electrostatic", "gravitational"]
Phase = Literal["gas", "liquid"]


@dataclass(frozen=True)
class CalibratedModel:
    E0: float  # J, negative (binding energy at n = 1)
    v0: float  # m/s
    R0: float  # m
    nu0: float  # Hz
    omega0: float  # rad/s
    tau0: float  # s
    rho_el0: float  # kg/m


@dataclass(frozen=True)
class RadialMode:
    n: int
    u_n: float
    k_n: float
    lambda_n: float
    nu_n: float
    W_T: float
    W_K: float
    W_int: float

    @property
    def W_E(self) -> float:
        """Field component, equal to the kinetic part."""
        return self.W_K

    @property
    def W_el(self) -> float:
        """Cycle-averaged electron energy, the positive level energy."""
        return 0.5 * self.W_T


@dataclass(frozen=True)
class NuclearModel:
    n: int
    R_N: float
    rho_nuc0: float  # kg/m, same convention as rho_el0
    coupling_ratio: float
    amplitude: float  # m
    kappa: float


@dataclass(frozen=True)
class FieldSample:
    r: float
    t: float
    p_r: float
    phi_T: float
    phi_ph: float
    phi_int: float
    phi_ext: float
    phi_nuc: float


class NuclearState(NamedTuple):
    velocity: float
    radius: float


class BulkVolume(NamedTuple):
    atom_count: float
    occupied_volume_l: float
    ratio_to_reference: float


def calibrate(E0_ev: float = DEFAULT_E0_EV, consts: PhysicalConstants = CODATA2018) -> CalibratedModel:
    """Fix ``v0``, ``R0`` and ``nu0`` from the ionization energy (eV, magnitude).

    ``R0`` is the de Broglie wavelength of the ``n = 1`` radial wave, so
    ``R0 = h / (m_e v0)``.
    """
    if not (E0_ev > 0 and math.isfinite(E0_ev)):
        raise ValueError("E0 must be positive")
    E0 = ev_to_joule(E0_ev, consts)
    v0 = math.sqrt(2.0 * E0 / consts.m_e)
    R0 = consts.h / math.sqrt(2.0 * E0 * consts.m_e)
    nu0 = v0 / R0
    return CalibratedModel(
        E0=-E0,
        v0=v0,
        R0=R0,
        nu0=nu0,
        omega0=2.0 * math.pi * nu0,
        tau0=1.0 / nu0,
        rho_el0=consts.m_e / (2.0 * math.pi * R0),
    )


def _check_level(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def _check_radius(model: CalibratedModel, r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0) or np.any(r > model.R0 * (1 + 1e-12)):
        raise ValueError("r must lie in (0, R0]")
    return r


def _scalar(x):
    return x.item() if isinstance(x, np.ndarray) and x.ndim == 0 else x


def radial_speed(model: CalibratedModel, n: int) -> float:
    _check_level(n)
    return model.v0 / n


def wavenumber(model: CalibratedModel, n: int) -> float:
    return model.omega0 / radial_speed(model, n)


def radial_mode(model: CalibratedModel, n: int, consts: PhysicalConstants = CODATA2018) -> RadialMode:
    u_n = radial_speed(model, n)
    lambda_n = consts.h / (consts.m_e * u_n)
    W_T = consts.m_e * u_n**2
    return RadialMode(
        n=n,
        u_n=u_n,
        k_n=model.omega0 / u_n,
        lambda_n=lambda_n,
        nu_n=u_n / lambda_n,
        W_T=W_T,
        W_K=0.5 * consts.m_e * u_n**2,
        W_int=-0.5 * consts.m_e * u_n**2,
    )


def mean_cos_squared(omega: float, tau: float) -> float:
    """``(1/tau) * integral_0^tau cos^2(omega t) dt``."""
    if tau <= 0:
        raise ValueError("tau must be positive")
    return 0.5 + math.sin(2.0 * omega * tau) / (4.0 * omega * tau)


def density_profile(model: CalibratedModel, n: int, r):
    """Shell mass density ``rho_el0 sin^2(k_n r) / r^2`` in kg/m^3."""
    r = _check_radius(model, r)
    k = wavenumber(model, n)
    return _scalar(model.rho_el0 * np.sin(k * r) ** 2 / r**2)


def momentum_field(model: CalibratedModel, n: int, r, t):
    rho = density_profile(model, n, r)
    return _scalar(rho * radial_speed(model, n) * np.cos(model.omega0 * np.asarray(t, dtype=float)))


def motion_potential(model: CalibratedModel, n: int, r, t):
    r = _check_radius(model, r)
    amp = model.rho_el0 * radial_speed(model, n) ** 2 / r**2
    return _scalar(amp * np.cos(model.omega0 * np.asarray(t, dtype=float)) ** 2)


def photon_potential(model: CalibratedModel, n: int, r, t):
    r = _check_radius(model, r)
    amp = model.rho_el0 * radial_speed(model, n) ** 2 / r**2
    return _scalar(amp * np.sin(model.omega0 * np.asarray(t, dtype=float)) ** 2)


def motion_potential_rate(model: CalibratedModel, n: int, r, t):
    """Analytic time derivative of :func:`motion_potential`."""
    r = _check_radius(model, r)
    w = model.omega0
    amp = model.rho_el0 * radial_speed(model, n) ** 2 / r**2
    return _scalar(-amp * w * np.sin(2.0 * w * np.asarray(t, dtype=float)))


def photon_potential_rate(model: CalibratedModel, n: int, r, t):
    r = _check_radius(model, r)
    w = model.omega0
    amp = model.rho_el0 * radial_speed(model, n) ** 2 / r**2
    return _scalar(amp * w * np.sin(2.0 * w * np.asarray(t, dtype=float)))


def retarded_time(t, r, R_N: float, consts: PhysicalConstants = CODATA2018, branch: int = -1):
    """``t +/- (r - R_N)/c``; ``branch=-1`` is inward propagation."""
    if branch not in (-1, 1):
        raise ValueError("branch must be +1 or -1")
    return t + branch * (np.asarray(r, dtype=float) - R_N) / consts.c


def nuclear_surface_potential(
    model: CalibratedModel,
    n: int,
    t_ret,
    R_N: float = DEFAULT_R_N,
):
    """Motion potential at the nuclear surface, ``rho_el0 u_n^2 cos^2(w0 t_ret) / R_N^2``."""
    amp = model.rho_el0 * radial_speed(model, n) ** 2 / R_N**2
    return _scalar(amp * np.cos(model.omega0 * np.asarray(t_ret, dtype=float)) ** 2)


def intrinsic_potential(model: CalibratedModel, n: int, r, t):
    r = _check_radius(model, r)
    k = wavenumber(model, n)
    c2 = np.cos(model.omega0 * np.asarray(t, dtype=float)) ** 2
    return _scalar(model.rho_el0 * radial_speed(model, n) * np.cos(k * r) ** 2 / r**2 * c2)


def nuclear_field_term(model: CalibratedModel, n: int, r, t, consts: PhysicalConstants = CODATA2018):
    """Externally sourced part of the shell potential, ``m_e nu0^2 sin(w0 t) / (2 n r)``."""
    r = _check_radius(model, r)
    _check_level(n)
    s = np.sin(model.omega0 * np.asarray(t, dtype=float))
    return _scalar(consts.m_e * model.nu0**2 / (2.0 * n) * s / r)


def external_potential(model: CalibratedModel, n: int, r, t, consts: PhysicalConstants = CODATA2018):
    return _scalar(
        np.asarray(intrinsic_potential(model, n, r, t))
        + np.asarray(nuclear_field_term(model, n, r, t, consts))
    )


def potential_balance(
    model: CalibratedModel,
    n: int,
    r: float,
    t: float,
    consts: PhysicalConstants = CODATA2018,
    R_N: float = DEFAULT_R_N,
    branch: int = -1,
) -> FieldSample:
    t_ret = retarded_time(t, r, R_N, consts, branch)
    return FieldSample(
        r=r,
        t=t,
        p_r=momentum_field(model, n, r, t),
        phi_T=motion_potential(model, n, r, t),
        phi_ph=photon_potential(model, n, r, t),
        phi_int=intrinsic_potential(model, n, r, t),
        phi_ext=external_potential(model, n, r, t, consts),
        phi_nuc=nuclear_surface_potential(model, n, t_ret, R_N),
    )


def nuclear_model(
    model: CalibratedModel,
    n: int,
    R_N: float = DEFAULT_R_N,
    consts: PhysicalConstants = CODATA2018,
) -> NuclearModel:
    """Nuclear oscillator for level ``n``.

    The proton mass is spread uniformly over the nuclear sphere and written
    in the shell convention ``rho(r) = rho_nuc0 / r^2`` with
    ``integral rho 4 pi r^2 dr = m_p``, so ``rho_nuc0 = m_p / (4 pi R_N)``.
    The electron density at ``R_N`` is taken from the shell profile without
    the ``r <= R0`` guard.
    """
    _check_level(n)
    if R_N <= 0:
        raise ValueError("R_N must be positive")
    rho_nuc0 = consts.m_p / (4.0 * math.pi * R_N)
    rho_nuc = rho_nuc0 / R_N**2
    rho_el = model.rho_el0 * math.sin(wavenumber(model, n) * R_N) ** 2 / R_N**2
    ratio = math.sqrt(rho_el / rho_nuc)
    return NuclearModel(
        n=n,
        R_N=R_N,
        rho_nuc0=rho_nuc0,
        coupling_ratio=ratio,
        amplitude=ratio * radial_speed(model, n) / model.omega0,
        kappa=rho_nuc * model.omega0**2,
    )


def nuclear_motion(
    model: CalibratedModel, n: int, nuclear: NuclearModel, t, sign: int = 1
) -> NuclearState:
    """Velocity and radius of the oscillating nuclear surface."""
    if nuclear.n != n:
        raise ValueError(f"nuclear model was built for n={nuclear.n}, not n={n}")
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    phase = model.omega0 * np.asarray(t, dtype=float)
    u_nuc = sign * nuclear.coupling_ratio * radial_speed(model, n) * np.cos(phase)
    r_N = nuclear.R_N + sign * nuclear.amplitude * np.sin(phase)
    return NuclearState(_scalar(u_nuc), _scalar(r_N))


def nuclear_field_intensity(model: CalibratedModel, consts: PhysicalConstants = CODATA2018) -> float:
    """``(phi_N0)^2 / R_N^3 = nu0^2 3 pi^2 m_e m_p / R0`` in kg^2/(m s^2)."""
    return model.nu0**2 * 3.0 * math.pi**2 * consts.m_e * consts.m_p / model.R0


def coupling_constant(
    model: CalibratedModel, coupling: Coupling, consts: PhysicalConstants = CODATA2018
) -> float:
    """Right-hand side ``K`` of ``eps r_N^{7/2} = K`` or ``gamma^-1 r_N^{7/2} = K``."""
    root = math.sqrt(2.0 * consts.m_e * model.R0 / (3.0 * consts.m_p))
    denom = 32.0 * math.pi**3 * consts.m_e * model.nu0**2
    if coupling == "electrostatic":
        return 6.0 * consts.e**2 / denom * root
    if coupling == "gravitational":
        return 6.0 * consts.m_p**2 / denom * root
    raise ValueError(f"unknown coupling {coupling!r}")


def radius_from_coupling_constant(
    K: float, coupling: Coupling, consts: PhysicalConstants = CODATA2018
) -> float:
    if K <= 0:
        raise ValueError("K must be positive")
    if coupling == "electrostatic":
        return (K / consts.eps0) ** (2.0 / 7.0)
    if coupling == "gravitational":
        return (K * consts.gamma_G) ** (2.0 / 7.0)
    raise ValueError(f"unknown coupling {coupling!r}")


def nuclear_radius_estimate(
    model: CalibratedModel, coupling: Coupling, consts: PhysicalConstants = CODATA2018
) -> float:
    return radius_from_coupling_constant(coupling_constant(model, coupling, consts), coupling, consts)


def bulk_volume_check(
    model: CalibratedModel,
    phase: Phase,
    mass_g: float,
    consts: PhysicalConstants = CODATA2018,
) -> BulkVolume:
    """Volume occupied by ``mass_g`` grams of atomic hydrogen at radius ``R0``.

    The ratio compares against the volume the same mass fills at the
    measured density of the given phase.
    """
    if not mass_g > 0:
        raise ValueError("mass must be positive")
    if phase not in REFERENCE_DENSITY_G_PER_L:
        raise ValueError(f"unknown phase {phase!r}")
    count = mass_g * 1e-3 / consts.m_p
    volume_l = count * 4.0 / 3.0 * math.pi * model.R0**3 * 1e3
    reference_l = mass_g / REFERENCE_DENSITY_G_PER_L[phase]
    return BulkVolume(count, volume_l, volume_l / reference_l)
