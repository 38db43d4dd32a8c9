import subprocess
import sys

import pytest

from conftest import validate
from dynhydrogen import cli


def test_calibrate_default(run_cli):
    res = run_cli("calibrate")
    assert res.code == 0
    row = res.rows()[0]
    assert float(row["v0"]) == pytest.approx(2.187e6, rel=1e-3)
    assert float(row["r0"]) == pytest.approx(3.33e-10, rel=5e-3)
    assert float(row["nu0"]) == pytest.approx(6.57e15, rel=5e-3)
    assert "units" in res.notes()


def test_calibrate_json(run_cli):
    doc = run_cli("calibrate", "--format", "json").json()
    assert set(doc) == {"e0_ev", "v0", "r0", "nu0", "rho_el0"}
    validate("calibrate", doc)


def test_calibrate_invalid(run_cli):
    res = run_cli("calibrate", "--e0-ev", "0")
    assert res.code == 2
    assert "E0 must be positive" in res.err
    assert res.out == ""


def test_spectrum_balmer_series(run_cli):
    rows = run_cli("spectrum", "--n", "2", "--n-max", "6").rows()
    assert list(rows[0]) == ["n", "m", "frequency_hz", "energy_ev", "wavelength_nm"]
    got = [float(r["wavelength_nm"]) for r in rows]
    for g, want in zip(got, [410.3, 434.2, 486.3, 656.5]):
        assert g == pytest.approx(want, rel=5e-3)
    freqs = [float(r["frequency_hz"]) for r in rows]
    assert freqs == sorted(freqs, reverse=True)


def test_spectrum_empty_and_invalid(run_cli):
    res = run_cli("spectrum", "--n", "6", "--n-max", "6")
    assert res.code == 0
    assert res.out == "n,m,frequency_hz,energy_ev,wavelength_nm\n"
    assert run_cli("spectrum", "--n", "3", "--m", "2").code == 2
    assert run_cli("spectrum", "--n", "3", "--m", "3").code == 2


def test_spectrum_json(run_cli):
    doc = run_cli("spectrum", "--format", "json", "--n-max", "4").json()
    assert isinstance(doc, list) and len(doc) == 6
    validate("spectrum", doc)


def test_decay_trace(run_cli):
    res = run_cli("decay-trace", "--n", "1", "--m", "2", "--periods", "10")
    assert res.code == 0
    notes = res.notes()
    assert float(notes["endpoint_residual"]) < 1e-6
    rows = res.rows()
    assert list(rows[0]) == ["t", "u2_analytic", "u2_oracle", "abs_rel_diff", "guarded"]
    flagged = [r for r in rows if r["guarded"] == "1"]
    assert flagged and all(r["u2_analytic"] == "nan" for r in flagged)
    clear = [r for r in rows if r["guarded"] == "0"]
    assert max(float(r["abs_rel_diff"]) for r in clear) < 1e-6


def test_decay_trace_json(run_cli):
    doc = run_cli("decay-trace", "--format", "json", "--steps", "10000", "--periods", "2").json()
    validate("decay-trace", doc)
    assert any(r["guarded"] and r["u2_oracle"] is None for r in doc["rows"])


def test_decay_trace_validation(run_cli):
    assert run_cli("decay-trace", "--steps", "5000").code == 2
    assert run_cli("decay-trace", "--n", "2", "--m", "2").code == 2
    assert run_cli("decay-trace", "--probe-r", "1.5").code == 2


def test_decay_trace_nonconvergent(run_cli, monkeypatch):
    def boom(*a, **k):
        raise cli.emission.ConvergenceError("no")

    monkeypatch.setattr(cli.emission, "numeric_decay_oracle", boom)
    assert run_cli("decay-trace").code == 3


def test_ensemble_defaults(run_cli):
    res = run_cli("ensemble")
    rows = res.rows()
    temps = sorted({float(r["temperature_k"]) for r in rows})
    assert temps == [293.0, 1273.0, 2273.0]
    assert len(rows) == 600
    lo, hi = map(int, res.notes()["transition_band_293K"].split(".."))
    assert 8 <= lo <= 14 and 80 <= hi <= 120
    one = run_cli("ensemble", "--temps", "500").rows()
    assert {r["temperature_k"] for r in one} == {"500"}
    assert run_cli("ensemble", "--temps", "0").code == 2
    validate("ensemble", run_cli("ensemble", "--format", "json", "--n-max", "10").json())


def test_compare(run_cli):
    res = run_cli("compare", "--n-max", "5")
    rows = res.rows()
    std = [float(r["standard_ev"]) for r in rows]
    dyn = [float(r["dynamic_ev"]) for r in rows]
    assert all(v < 0 for v in std) and all(v > 0 for v in dyn)
    assert all(abs(b) < abs(a) for a, b in zip(std, std[1:]))
    assert all(b < a for a, b in zip(dyn, dyn[1:]))
    notes = res.notes()
    assert abs(float(notes["zero_radius_full_m"])) < 1e-20
    assert float(notes["zero_radius_mechanical_m"]) == pytest.approx(1.058e-10, rel=1e-3)
    validate("compare", run_cli("compare", "--format", "json").json())


def test_baseline(run_cli):
    rows = run_cli("baseline", "--n-max", "3").rows()
    assert float(rows[0]["energy_ev"]) == pytest.approx(-13.606, rel=1e-3)
    validate("baseline", run_cli("baseline", "--format", "json").json())
    assert run_cli("baseline", "--n-max", "0").code == 2


def test_bulk_and_nuclear(run_cli):
    bulk = {r["phase"]: r for r in run_cli("bulk").rows()}
    assert float(bulk["gas"]["occupied_volume_l"]) == pytest.approx(8.38e-3, rel=0.02)
    assert float(bulk["liquid"]["occupied_volume_l"]) == pytest.approx(6.59, rel=0.02)
    validate("bulk", run_cli("bulk", "--format", "json").json())

    nuc = {r["quantity"]: r for r in run_cli("nuclear").rows()}
    assert float(nuc["field_intensity"]["value"]) == pytest.approx(5.78e-15, rel=0.02)
    assert float(nuc["r_n_electrostatic"]["value"]) == pytest.approx(3.05e-11, rel=0.05)
    assert nuc["r_n_electrostatic"]["verdict"] == "far too big"
    assert nuc["r_n_gravitational"]["verdict"] == "far too small"
    validate("nuclear", run_cli("nuclear", "--format", "json").json())


def test_out_file(run_cli, tmp_path):
    path = tmp_path / "cal.csv"
    res = run_cli("calibrate", "--out", str(path))
    assert res.code == 0 and res.out == ""
    assert path.read_text().startswith("e0_ev,")


def test_unknown_command_exit_code(run_cli):
    with pytest.raises(SystemExit) as exc:
        cli.main(["spectra"])
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["calibrate"],
    ["ensemble", "--format", "json"],
    ["decay-trace", "--steps", "20000", "--seed", "4"],
])
def test_byte_identical_subprocess(argv):
    cmd = [sys.executable, "-m", "dynhydrogen", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
