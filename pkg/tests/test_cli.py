"""Command-line front end: artifacts, sidecars, exit codes, determinism."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from foscillator import (
    DensityMatrix,
    coherent_density,
    evolve_density,
    kerr,
    schmidt_spectrum,
    two_mode_coherent_state,
)
from foscillator.cli import main


def _read_sidecar(path):
    with open(str(path) + ".meta.json", "r", encoding="utf-8") as fh:
        return json.load(fh)


def test_tomogram_vacuum(tmp_path):
    out = tmp_path / "slice.csv"
    code = main(["tomogram", "--state", "vacuum", "--output", str(out)])
    assert code == 0
    meta = _read_sidecar(out)
    assert meta["status"] == "ok"
    assert meta["checks"]["norm_residual"]["value"] < 1e-6
    header = out.read_text().splitlines()[0]
    assert header == "x,value"


def test_degenerate_ray_exits_2_without_artifact(tmp_path):
    out = tmp_path / "bad.csv"
    code = main(["tomogram", "--mu", "0", "--nu", "0", "--output", str(out)])
    assert code == 2
    assert not out.exists()


def test_thermo_zero_coupling_columns_match(tmp_path):
    out = tmp_path / "thermo.csv"
    assert main(["thermo", "--beta-min", "0.5", "--beta-max", "2", "--g", "0",
                 "--output", str(out)]) == 0
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    for row in rows:
        assert row[1] == row[2]  # Z0 and Zf byte-identical


def test_repeated_runs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["thermo", "--beta-min", "0.2", "--beta-max", "3", "--g", "0.002"]
    assert main(argv + ["--output", str(a)]) == 0
    assert main(argv + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert _read_sidecar(a) == _read_sidecar(b)


def test_threaded_wigner_is_deterministic(tmp_path, monkeypatch):
    argv = ["wigner", "--variant", "usual-parity", "--kind", "kerr", "--chi", "0.1",
            "--state", "coherent:0.8", "--dim", "12", "--extent", "1.5",
            "--points", "7"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    monkeypatch.setenv("FOSC_THREADS", "3")
    assert main(argv + ["--output", str(a)]) == 0
    monkeypatch.setenv("FOSC_THREADS", "1")
    assert main(argv + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    meta = _read_sidecar(a)
    assert meta["checks"]["max_imag"]["value"] < 1e-9


def test_bad_thread_env_exits_2(tmp_path, monkeypatch):
    monkeypatch.setenv("FOSC_THREADS", "-1")
    out = tmp_path / "w.csv"
    code = main(["wigner", "--variant", "usual-parity", "--dim", "8",
                 "--extent", "1", "--points", "3", "--output", str(out)])
    assert code == 2


def test_quantum_evolve_json_round_trip(tmp_path):
    out = tmp_path / "rho.json"
    argv = ["quantum-evolve", "--kind", "kerr", "--chi", "0.1",
            "--state", "coherent:1.0", "--dim", "24", "--time", "1.5",
            "--output", str(out)]
    assert main(argv) == 0
    with open(out, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    parsed = DensityMatrix.from_dict(data)
    expected = evolve_density(coherent_density(1.0, 24), kerr(0.1), 1.5)
    np.testing.assert_array_equal(parsed.matrix, expected.matrix)
    meta = _read_sidecar(out)
    assert meta["checks"]["invariant_drift"]["value"] < 1e-9
    assert meta["checks"]["trace_residual"]["ok"]


def test_two_mode_json_matches_library(tmp_path):
    out = tmp_path / "pair.json"
    assert main(["two-mode", "--kind", "kerr", "--chi", "0.1",
                 "--output", str(out)]) == 0
    with open(out, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    sp = schmidt_spectrum(two_mode_coherent_state(1.0, 1.0, kerr(0.1), (40, 40)))
    np.testing.assert_allclose(data["singular_values"], sp.singular_values, atol=1e-14)
    assert data["sigma2"] == pytest.approx(sp.sigma2, rel=1e-12)
    assert data["separable"] is False


def test_classical_trajectory_checks(tmp_path):
    out = tmp_path / "traj.csv"
    assert main(["classical-trajectory", "--kind", "q", "--lambda", "0.1",
                 "--q0", "1.4", "--p0", "0", "--t-max", "20", "--steps", "80",
                 "--output", str(out)]) == 0
    meta = _read_sidecar(out)
    assert meta["checks"]["invariant_spread"]["value"] < 1e-9
    assert meta["checks"]["energy_drift"]["value"] < 1e-12
    header = out.read_text().splitlines()[0]
    assert header == "t,q,p,E,q0,p0"


def test_coherent_amplitude_table(tmp_path):
    out = tmp_path / "amps.csv"
    assert main(["coherent", "--kind", "kerr", "--chi", "0.1",
                 "--alpha-re", "1.0", "--dim", "40", "--output", str(out)]) == 0
    meta = _read_sidecar(out)
    assert meta["checks"]["eigen_residual"]["value"] < 1e-8
    first = out.read_text().splitlines()[1].split(",")
    assert float(first[1]) == pytest.approx(0.6191053719393739, rel=1e-12)


def test_coherent_wavefunction_norm_check(tmp_path):
    out = tmp_path / "wave.csv"
    assert main(["coherent", "--wavefunction", "--alpha-re", "0.5",
                 "--x-min", "-7", "--x-max", "7", "--x-points", "701",
                 "--output", str(out)]) == 0
    meta = _read_sidecar(out)
    assert meta["checks"]["wave_norm_residual"]["value"] < 1e-6


def test_state_selector_from_file(tmp_path):
    rho = coherent_density(0.5, 12)
    state_path = tmp_path / "state.json"
    state_path.write_text(json.dumps(rho.to_dict()))
    out = tmp_path / "w.csv"
    assert main(["wigner", "--state", f"file:{state_path}", "--dim", "12",
                 "--extent", "6", "--points", "7", "--output", str(out)]) == 0


def test_fock_state_selector_min_real(tmp_path):
    out = tmp_path / "w.csv"
    assert main(["wigner", "--state", "fock:1", "--dim", "24", "--extent", "4",
                 "--points", "41", "--output", str(out)]) == 0
    meta = _read_sidecar(out)
    assert meta["checks"]["min_real"]["value"] == pytest.approx(-2.0, abs=1e-6)


def test_config_overrides_flags(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"g": 0.01}))
    out = tmp_path / "t.csv"
    assert main(["thermo", "--beta-min", "1", "--beta-max", "2", "--g", "0",
                 "--config", str(cfg), "--output", str(out)]) == 0
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    assert rows[0][1] != rows[0][2]  # coupling came from the config file
    meta = _read_sidecar(out)
    assert meta["parameters"]["g"] == 0.01


def test_unknown_config_key_exits_2(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"bogus": 1}))
    out = tmp_path / "t.csv"
    code = main(["thermo", "--config", str(cfg), "--output", str(out)])
    assert code == 2
    assert not out.exists()


def test_nonlinearity_config_block(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"nonlinearity": {"kind": "kerr", "chi": 0.5}}))
    out = tmp_path / "rho.json"
    assert main(["quantum-evolve", "--state", "fock:1", "--dim", "8",
                 "--config", str(cfg), "--output", str(out)]) == 0
    meta = _read_sidecar(out)
    assert meta["parameters"]["kind"] == "kerr"
    assert meta["parameters"]["chi"] == 0.5


def test_numeric_tolerance_breach_exits_3(tmp_path):
    out = tmp_path / "w.csv"
    code = main(["wigner", "--variant", "deformed-parity", "--kind", "custom",
                 "--table", "1,10000000,20000000", "--state", "vacuum",
                 "--dim", "3", "--pad", "0", "--extent", "2", "--points", "3",
                 "--output", str(out)])
    assert code == 3


def test_stdout_artifact(capsys):
    assert main(["tomogram", "--state", "vacuum", "--x-points", "5",
                 "--output", "-"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("x,value\n")
    assert json.loads(captured.err)["status"] == "ok"


def test_csv_uses_17_significant_digits(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["thermo", "--beta-min", "1", "--beta-max", "1",
                 "--beta-steps", "1", "--output", str(out)]) == 0
    row = out.read_text().splitlines()[1].split(",")
    assert row[1] == format(0.9595173756674719, ".17g")


def test_module_entry_point(tmp_path):
    out = tmp_path / "t.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "foscillator", "thermo", "--beta-min", "1",
         "--beta-max", "2", "--output", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert out.exists()


def test_missing_profile_parameter_exits_2(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["quantum-evolve", "--kind", "q", "--output", str(out)]) == 2
    assert main(["quantum-evolve", "--kind", "kerr", "--output", str(out)]) == 2
