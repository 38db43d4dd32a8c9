"""Photon emission in the dynamic model.

Line frequencies follow from energy differences of radial modes. The
deterministic decay picture lets the nuclear oscillation decay
exponentially over an emission interval ``tau_eps`` while the photon
potential grows at a constant rate; the electron velocity then goes from
``u_n`` to ``u_m``.

Index convention: the model's energy scale is reversed with respect to the
standard one. Small ``n`` is high excitation, so a line is emitted going
from ``n`` to a larger ``m``. :class:`EmissionLine` always stores ``n < m``
and a positive frequency.

The electron velocity ``u^2(t)`` is singular wherever ``cos(w0 t) = 0``
but the product ``w(t) = u^2(t) cos^2(w0 t)`` is smooth. Both the closed
form and the numeric integrator work with ``w`` and divide by ``cos^2``
only outside a guard band.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamic import CalibratedModel, radial_speed
from .quantities import CODATA2018, PhysicalConstants

GUARD = 0.1
MIN_ORACLE_STEPS = 10_000


class GuardBandError(ValueError):
    """Requested time lies too close to a zero of ``cos(w0 t)``."""


class NegativeRadicandError(ValueError):
    """The velocity radicand went negative."""


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class EmissionLine:
    n: int
    m: float  # int, or math.inf for the series limit
    frequency: float  # Hz
    energy: float  # J
    wavelength: float  # m


@dataclass(frozen=True)
class DecayConfig:
    n: int
    m: int
    tau_eps: float  # s

    @property
    def decay_rate(self) -> float:
        return 2.0 / self.tau_eps * math.log(self.m / self.n)


@dataclass(frozen=True)
class DecayTrace:
    times: np.ndarray
    w: np.ndarray  # u^2 cos^2, smooth
    cos_phase: np.ndarray  # cos(w0 t) carried by the integrator
    u_squared: np.ndarray  # w / cos^2, nan inside the guard band
    guarded: np.ndarray  # True where |cos| <= guard
    phi_el: np.ndarray
    phi_nuc: np.ndarray
    photon_rate: float
    endpoint_residual: float  # relative to u_n^2
    steps: int


def _inv_sq(m: float) -> float:
    return 0.0 if math.isinf(m) else 1.0 / (m * m)


def balmer_prefactor(model: CalibratedModel, consts: PhysicalConstants = CODATA2018) -> float:
    """``m_e (nu0 R0)^2 / (2 h)`` in Hz."""
    return consts.m_e * (model.nu0 * model.R0) ** 2 / (2.0 * consts.h)


def energy_difference(
    model: CalibratedModel, n: int, m: float, consts: PhysicalConstants = CODATA2018
) -> float:
    """``(m_e/2)(u_n^2 - u_m^2)``; positive iff ``n < m``."""
    if n < 1 or m < 1:
        raise ValueError("levels must be >= 1")
    return 0.5 * consts.m_e * model.v0**2 * (_inv_sq(n) - _inv_sq(m))


def line_frequency(
    model: CalibratedModel, n: int, m: float, consts: PhysicalConstants = CODATA2018
) -> EmissionLine:
    if not 1 <= n < m:
        raise ValueError(f"need 1 <= n < m, got n={n}, m={m}")
    freq = balmer_prefactor(model, consts) * (_inv_sq(n) - _inv_sq(m))
    return EmissionLine(
        n=n,
        m=m,
        frequency=freq,
        energy=energy_difference(model, n, m, consts),
        wavelength=consts.c / freq,
    )


def decay_config(n: int, m: int, tau_eps: float) -> DecayConfig:
    if not 1 <= n < m:
        raise ValueError(f"need 1 <= n < m, got n={n}, m={m}")
    if not tau_eps > 0:
        raise ValueError("tau_eps must be positive")
    return DecayConfig(n=n, m=m, tau_eps=tau_eps)


def emission_interval_ratio(n: int, m1: int, m2: int) -> float:
    """Ratio of emission intervals for ``n -> m1`` and ``n -> m2`` at equal damping."""
    if n < 1 or m1 <= n or m2 <= n:
        raise ValueError("need m1, m2 > n >= 1")
    return (math.log(m1) - math.log(n)) / (math.log(m2) - math.log(n))


def photon_rate(
    model: CalibratedModel, cfg: DecayConfig, probe_r: float, consts: PhysicalConstants = CODATA2018
) -> float:
    """Constant time derivative of the photon potential at ``probe_r``."""
    if probe_r <= 0:
        raise ValueError("probe radius must be positive")
    du2 = radial_speed(model, cfg.n) ** 2 - radial_speed(model, cfg.m) ** 2
    return model.rho_el0 / probe_r**2 * du2 / cfg.tau_eps


def _drive(model: CalibratedModel, cfg: DecayConfig, probe_r: float, consts) -> float:
    # (r^2 / rho_el0) * photon rate, in (m/s)^2 per second
    return probe_r**2 / model.rho_el0 * photon_rate(model, cfg, probe_r, consts)


def nuclear_emission_potential(
    model: CalibratedModel, cfg: DecayConfig, t, probe_r: float
):
    u_n2 = radial_speed(model, cfg.n) ** 2
    t = np.asarray(t, dtype=float)
    val = model.rho_el0 * u_n2 / probe_r**2 * np.sin(model.omega0 * t) ** 2 * np.exp(-cfg.decay_rate * t)
    return val.item() if val.ndim == 0 else val


def analytic_product(
    model: CalibratedModel,
    cfg: DecayConfig,
    t,
    probe_r: float,
    consts: PhysicalConstants = CODATA2018,
):
    """Closed-form ``w(t) = u^2(t) cos^2(w0 t)``.

    ``w = C - u_n^2 exp(-alpha t) sin^2(w0 t) - (r^2/rho_el0) (dphi_ph/dt) t``
    with ``C = u_n^2``.
    """
    u_n2 = radial_speed(model, cfg.n) ** 2
    t = np.asarray(t, dtype=float)
    w = (
        u_n2
        - u_n2 * np.exp(-cfg.decay_rate * t) * np.sin(model.omega0 * t) ** 2
        - _drive(model, cfg, probe_r, consts) * t
    )
    return w.item() if w.ndim == 0 else w


def analytic_velocity(
    model: CalibratedModel,
    cfg: DecayConfig,
    t: float,
    probe_r: float,
    consts: PhysicalConstants = CODATA2018,
    guard: float = GUARD,
) -> float:
    """Squared electron velocity ``u^2(t)`` during emission.

    Raises :class:`GuardBandError` if ``|cos(w0 t)| <= guard`` and
    :class:`NegativeRadicandError` if the radicand is negative. Within
    ``[0, tau_eps]`` the radicand is non-negative for any ``n < m``; it can
    turn negative only when the closed form is extrapolated past ``tau_eps``.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    c = math.cos(model.omega0 * t)
    if abs(c) <= guard:
        raise GuardBandError(f"|cos(w0 t)| = {abs(c):.3g} is inside the guard band")
    w = analytic_product(model, cfg, t, probe_r, consts)
    if w < 0:
        raise NegativeRadicandError(f"radicand {w:.6g} < 0 at t = {t:.6g} s")
    return w / (c * c)


def emission_potential_profile(
    model: CalibratedModel,
    cfg: DecayConfig,
    x,
    probe_r: float,
    consts: PhysicalConstants = CODATA2018,
):
    """Electron motion potential at reduced time ``x = t / tau_eps``."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or np.any(x > 1):
        raise ValueError("x must lie in [0, 1]")
    u_n2 = radial_speed(model, cfg.n) ** 2
    u_m2 = radial_speed(model, cfg.m) ** 2
    phi_nuc = nuclear_emission_potential(model, cfg, x * cfg.tau_eps, probe_r)
    val = -np.asarray(phi_nuc) + model.rho_el0 / probe_r**2 * (u_n2 - (u_n2 - u_m2) * x)
    return val.item() if val.ndim == 0 else val


def integrate_product_form(
    u_n2: float,
    omega: float,
    decay_rate: float,
    drive: float,
    t_end: float,
    steps: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Classical RK4 for the coupled system

        e' = -decay_rate * e
        c' = -omega * s,  s' = omega * c
        w' = -(u_n2 * e * (2 omega c s - decay_rate s^2) + drive)

    from ``e = 1, c = 1, s = 0, w = u_n2``. The damping and oscillator
    equations are linear, so each RK4 step multiplies them by a fixed
    amplification factor and their stage values are fixed multiples of the
    step-start value; this lets the whole trajectory be evaluated without a
    Python loop. ``w`` does not feed back, so its update is the RK4 weighted
    sum of the right-hand side over the stage values.

    Returns ``(times, w, c, s, e)``.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    h = t_end / steps
    k = np.arange(steps + 1, dtype=float)

    # damping: e' = lam e
    lam = -decay_rate
    z = h * lam
    e_amp = 1 + z + z**2 / 2 + z**3 / 6 + z**4 / 24
    # oscillator as q = c + i s, q' = i omega q
    y = 1j * omega * h
    q_amp = 1 + y + y**2 / 2 + y**3 / 6 + y**4 / 24

    e = e_amp**k
    q = q_amp**k

    def stages(x, a):
        x1 = x
        x2 = x + 0.5 * a * x1
        x3 = x + 0.5 * a * x2
        x4 = x + a * x3
        return x1, x2, x3, x4

    def rhs(ee, qq):
        c, s = qq.real, qq.imag
        return -(u_n2 * ee * (2.0 * omega * c * s - decay_rate * s * s) + drive)

    es = stages(e[:-1], z)
    qs = stages(q[:-1], y)
    f = [rhs(ee, qq) for ee, qq in zip(es, qs)]
    dw = h / 6.0 * (f[0] + 2.0 * f[1] + 2.0 * f[2] + f[3])
    w = np.concatenate(([u_n2], u_n2 + np.cumsum(dw)))
    return k * h, w, q.real, q.imag, e


def numeric_decay_oracle(
    model: CalibratedModel,
    cfg: DecayConfig,
    probe_r: float,
    steps: int = 100_000,
    consts: PhysicalConstants = CODATA2018,
    tol: float = 1e-6,
    max_refinements: int = 4,
    guard: float = GUARD,
) -> DecayTrace:
    """Integrate the emission dynamics numerically in product form.

    The step count is doubled until two successive endpoint values agree
    to ``tol`` (relative to ``u_n^2``); :class:`ConvergenceError` is raised
    if that never happens within ``max_refinements`` doublings.
    """
    if steps < MIN_ORACLE_STEPS:
        raise ValueError(f"steps must be >= {MIN_ORACLE_STEPS}")
    u_n2 = radial_speed(model, cfg.n) ** 2
    args = (u_n2, model.omega0, cfg.decay_rate, _drive(model, cfg, probe_r, consts), cfg.tau_eps)

    times, w, c, s, e = integrate_product_form(*args, steps)
    for _ in range(max_refinements + 1):
        fine = integrate_product_form(*args, 2 * steps)
        residual = abs(fine[1][-1] - w[-1]) / u_n2
        if residual <= tol:
            break
        steps *= 2
        times, w, c, s, e = fine
    else:
        raise ConvergenceError(f"endpoint residual {residual:.3g} exceeds {tol:g}")

    guarded = np.abs(c) <= guard
    with np.errstate(divide="ignore", invalid="ignore"):
        u2 = np.where(guarded, np.nan, w / c**2)
    rho_r2 = model.rho_el0 / probe_r**2
    phi_nuc = rho_r2 * u_n2 * s**2 * e
    return DecayTrace(
        times=times,
        w=w,
        cos_phase=c,
        u_squared=u2,
        guarded=guarded,
        phi_el=rho_r2 * w,
        phi_nuc=phi_nuc,
        photon_rate=photon_rate(model, cfg, probe_r, consts),
        endpoint_residual=residual,
        steps=steps,
    )


def observed_order(
    model: CalibratedModel,
    cfg: DecayConfig,
    probe_r: float,
    base_steps: int,
    consts: PhysicalConstants = CODATA2018,
) -> float:
    """Richardson estimate of the integrator's order from three step sizes."""
    args = (
        radial_speed(model, cfg.n) ** 2,
        model.omega0,
        cfg.decay_rate,
        _drive(model, cfg, probe_r, consts),
        cfg.tau_eps,
    )
    w1, w2, w4 = (integrate_product_form(*args, base_steps * f)[1][-1] for f in (1, 2, 4))
    return math.log2(abs(w1 - w2) / abs(w2 - w4))
