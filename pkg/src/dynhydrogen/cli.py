"""Command-line front end.

Every subcommand writes one CSV table (header row, ``#`` footer comments)
or one JSON document. Exit codes: 0 success, 2 invalid input, 3 numerical
non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

import numpy as np

from . import baseline, dynamic, emission, thermo
from .quantities import CODATA2018, joule_to_ev

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NONCONVERGENT = 3

COMMANDS = ("calibrate", "spectrum", "decay-trace", "ensemble", "baseline", "compare", "bulk", "nuclear")
TRACE_ROWS = 1000


class Table:
    """Rows plus footer notes, rendered as CSV or JSON."""

    def __init__(self, columns: Sequence[str], rows=(), notes=None, document=None):
        self.columns = list(columns)
        self.rows = [list(r) for r in rows]
        self.notes = dict(notes or {})
        # JSON document override; defaults to a list of row objects
        self.document = document

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_fmt(v) for v in row])
        for key, value in self.notes.items():
            buf.write(f"# {key}={_fmt(value)}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        doc = self.document
        if doc is None:
            doc = [dict(zip(self.columns, (_jsonable(v) for v in row))) for row in self.rows]
        return json.dumps(_jsonable(doc), indent=2, ensure_ascii=False) + "\n"


def _fmt(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.6g}"
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return None
        return float(f"{value:.6g}")
    return value


def _model(args) -> dynamic.CalibratedModel:
    return dynamic.calibrate(args.e0_ev)


def cmd_calibrate(args) -> Table:
    model = _model(args)
    row = [args.e0_ev, model.v0, model.R0, model.nu0, model.rho_el0]
    columns = ["e0_ev", "v0", "r0", "nu0", "rho_el0"]
    return Table(
        columns,
        [row],
        notes={"units": "eV m/s m Hz kg/m"},
        document=dict(zip(columns, row)),
    )


def cmd_spectrum(args) -> Table:
    model = _model(args)
    if args.n is not None and args.m is not None and args.n >= args.m:
        raise ValueError(f"need n < m, got n={args.n}, m={args.m}")
    if args.n is not None and args.n < 1:
        raise ValueError("n must be >= 1")
    n_max = args.n_max if args.n_max is not None else 6
    lowers = [args.n] if args.n is not None else range(1, n_max)
    lines = []
    for lo in lowers:
        uppers = [args.m] if args.m is not None else range(lo + 1, n_max + 1)
        for up in uppers:
            lines.append(emission.line_frequency(model, lo, up))
    lines.sort(key=lambda ln: (-ln.frequency, ln.n, ln.m))
    rows = [
        [ln.n, ln.m, ln.frequency, joule_to_ev(ln.energy), ln.wavelength * 1e9] for ln in lines
    ]
    return Table(["n", "m", "frequency_hz", "energy_ev", "wavelength_nm"], rows)


def cmd_decay_trace(args) -> Table:
    model = _model(args)
    n = args.n if args.n is not None else 1
    m = args.m if args.m is not None else 2
    if args.periods < 1:
        raise ValueError("periods must be >= 1")
    if not 0 < args.probe_r <= 1:
        raise ValueError("probe-r must lie in (0, 1]")
    if args.steps < emission.MIN_ORACLE_STEPS:
        raise ValueError(f"steps must be >= {emission.MIN_ORACLE_STEPS}")
    cfg = emission.decay_config(n, m, args.periods * model.tau0)
    probe_r = args.probe_r * model.R0
    trace = emission.numeric_decay_oracle(model, cfg, probe_r, steps=args.steps)

    u_n2 = dynamic.radial_speed(model, n) ** 2
    u_m2 = dynamic.radial_speed(model, m) ** 2
    stride = max(1, trace.steps // TRACE_ROWS)
    idx = list(range(0, trace.steps + 1, stride))
    if idx[-1] != trace.steps:
        idx.append(trace.steps)
    rows = []
    for i in idx:
        t = float(trace.times[i])
        if trace.guarded[i]:
            rows.append([t, math.nan, math.nan, math.nan, True])
            continue
        ua = emission.analytic_velocity(model, cfg, t, probe_r)
        uo = float(trace.u_squared[i])
        rows.append([t, ua, uo, abs(ua - uo) / u_n2, False])
    endpoint = abs(trace.w[-1] / trace.cos_phase[-1] ** 2 - u_m2) / u_m2
    notes = {
        "n": n,
        "m": m,
        "tau_eps_s": cfg.tau_eps,
        "steps": trace.steps,
        "endpoint_residual": endpoint,
        "refinement_residual": trace.endpoint_residual,
    }
    columns = ["t", "u2_analytic", "u2_oracle", "abs_rel_diff", "guarded"]
    doc = {
        "rows": [dict(zip(columns, r)) for r in rows],
        **notes,
    }
    return Table(columns, rows, notes=notes, document=doc)


def cmd_ensemble(args) -> Table:
    model = _model(args)
    temps = args.temps or list(thermo.FIGURE_TEMPERATURES)
    n_max = args.n_max if args.n_max is not None else 200
    rows, notes, bands = [], {}, {}
    for T in temps:
        dist = thermo.distribution_table(model, T, n_max)
        rows.extend([T, n, f] for n, f in dist)
        lo, hi = thermo.transition_band(model, T, args.lo, args.hi)
        notes[f"transition_band_{_fmt(T)}K"] = f"{lo}..{hi}"
        bands[_fmt(T)] = {"n_lo": lo, "n_hi": hi}
    notes["thresholds"] = f"{_fmt(args.lo)},{_fmt(args.hi)}"
    columns = ["temperature_k", "n", "factor"]
    doc = {
        "rows": [dict(zip(columns, r)) for r in rows],
        "transition_band": bands,
        "thresholds": {"lo": args.lo, "hi": args.hi},
    }
    return Table(columns, rows, notes=notes, document=doc)


def cmd_baseline(args) -> Table:
    n_max = args.n_max if args.n_max is not None else 5
    rows = []
    for n in range(1, n_max + 1):
        E = baseline.energy_level(n)
        rows.append([n, joule_to_ev(E), E / CODATA2018.hbar])
    a = baseline.bohr_radius()
    columns = ["n", "energy_ev", "omega_rad_s"]
    doc = {"rows": [dict(zip(columns, r)) for r in rows], "bohr_radius_m": a}
    return Table(columns, rows, notes={"bohr_radius_m": a}, document=doc)


def cmd_compare(args) -> Table:
    model = _model(args)
    n_max = args.n_max if args.n_max is not None else 5
    rows = []
    for n in range(1, n_max + 1):
        standard = joule_to_ev(baseline.energy_level(n))
        dyn = joule_to_ev(dynamic.radial_mode(model, n).W_el)
        rows.append([n, standard, dyn])
    zero = {v: baseline.frequency_zero_radius(v) for v in ("full", "mechanical")}
    notes = {"zero_radius_full_m": zero["full"], "zero_radius_mechanical_m": zero["mechanical"]}
    columns = ["n", "standard_ev", "dynamic_ev"]
    doc = {"rows": [dict(zip(columns, r)) for r in rows], "zero_radius_m": zero}
    return Table(columns, rows, notes=notes, document=doc)


def cmd_bulk(args) -> Table:
    model = _model(args)
    rows = []
    for phase, density in dynamic.REFERENCE_DENSITY_G_PER_L.items():
        res = dynamic.bulk_volume_check(model, phase, density)
        rows.append([phase, density, res.atom_count, res.occupied_volume_l, res.ratio_to_reference])
    return Table(["phase", "mass_g", "atom_count", "occupied_volume_l", "ratio_to_reference"], rows)


def _verdict(r: float) -> str:
    ref = dynamic.DEFAULT_R_N
    if r > 10 * ref:
        return "far too big"
    if r < ref / 10:
        return "far too small"
    return "consistent"


def cmd_nuclear(args) -> Table:
    model = _model(args)
    intensity = dynamic.nuclear_field_intensity(model)
    k_el = dynamic.coupling_constant(model, "electrostatic")
    k_grav = dynamic.coupling_constant(model, "gravitational")
    r_el = dynamic.radius_from_coupling_constant(k_el, "electrostatic")
    r_grav = dynamic.radius_from_coupling_constant(k_grav, "gravitational")
    r_grav_printed = dynamic.radius_from_coupling_constant(dynamic.PRINTED_K_GRAV, "gravitational")
    rows = [
        ["field_intensity", intensity, "kg^2/(m s^2)", ""],
        ["k_electrostatic", k_el, "", ""],
        ["r_n_electrostatic", r_el, "m", _verdict(r_el)],
        ["k_gravitational", k_grav, "", "direct substitution"],
        ["r_n_gravitational", r_grav, "m", _verdict(r_grav)],
        ["k_gravitational_printed", dynamic.PRINTED_K_GRAV, "", "unconfirmed"],
        ["r_n_gravitational_printed", r_grav_printed, "m", _verdict(r_grav_printed)],
    ]
    return Table(["quantity", "value", "unit", "verdict"], rows)


HANDLERS = {
    "calibrate": cmd_calibrate,
    "spectrum": cmd_spectrum,
    "decay-trace": cmd_decay_trace,
    "ensemble": cmd_ensemble,
    "baseline": cmd_baseline,
    "compare": cmd_compare,
    "bulk": cmd_bulk,
    "nuclear": cmd_nuclear,
}


def _temps(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid temperature list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e0-ev", type=float, default=dynamic.DEFAULT_E0_EV,
                        help="ionization energy in eV (default %(default)s)")
    common.add_argument("--n", type=int, default=None, help="lower level")
    common.add_argument("--m", type=int, default=None, help="upper level")
    common.add_argument("--n-max", type=int, default=None, help="highest level in tables")
    common.add_argument("--temps", type=_temps, default=None,
                        help="comma-separated temperatures in K (default 293,1273,2273)")
    common.add_argument("--periods", type=int, default=10,
                        help="emission interval in resonance periods (default %(default)s)")
    common.add_argument("--probe-r", type=float, default=0.5,
                        help="probe radius as a fraction of R0 (default %(default)s)")
    common.add_argument("--steps", type=int, default=100_000,
                        help="integrator steps, at least 10000 (default %(default)s)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default="-", help="output path, '-' for stdout")
    common.add_argument("--lo", type=float, default=thermo.DEFAULT_LO)
    common.add_argument("--hi", type=float, default=thermo.DEFAULT_HI)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized sweeps (no command currently draws random numbers)")

    parser = argparse.ArgumentParser(
        prog="dynhydrogen", description="Standard and dynamic hydrogen model calculator."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.n_max is not None and args.n_max < 1:
            raise ValueError("n-max must be >= 1")
        for T in args.temps or ():
            if not T > 0:
                raise ValueError("temperatures must be positive")
        table = HANDLERS[args.command](args)
    except emission.ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    text = table.to_json() if args.format == "json" else table.to_csv()
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
