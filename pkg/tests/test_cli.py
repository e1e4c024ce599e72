import csv
import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import simpson

from mobius_dirac.cli import main
from mobius_dirac.config import ConfigError, RunConfig, golden_config, parse, serialize
from mobius_dirac.tables import reference_energies


def read_csv(path_or_text):
    text = path_or_text.read_text() if hasattr(path_or_text, "read_text") else path_or_text
    meta = {}
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            if " = " in line:
                k, v = line[2:].split(" = ", 1)
                meta[k] = v
        else:
            body.append(line)
    return meta, list(csv.DictReader(io.StringIO("\n".join(body))))


class TestConfig:
    @pytest.mark.parametrize("table", [1, 2, 3, 4])
    def test_golden_round_trip(self, table):
        cfg = golden_config(table)
        text = serialize(cfg)
        assert parse(text) == cfg
        assert serialize(parse(text)) == text

    def test_comments_and_lists(self):
        cfg = parse("# header\nlimit = spin  # trailing\nn_list = 0, 1,2\nH_list = 0, 0.5\n\n")
        assert cfg.limit == "spin" and cfg.n_list == [0, 1, 2] and cfg.H_list == [0.0, 0.5]

    @pytest.mark.parametrize("text", ["limit = sideways", "bogus = 1", "alpha = fast",
                                      "kappa_list = 0", "just words", "partners = maybe",
                                      "branch = both", "n_list = -1"])
    def test_rejects(self, text):
        with pytest.raises(ConfigError):
            parse(text)

    def test_invalid_physics_is_a_config_error(self):
        with pytest.raises(ConfigError):
            parse("alpha = -1").potential()

    @settings(max_examples=50, deadline=None)
    @given(st.floats(-10, 10, allow_nan=False), st.floats(1e-4, 1.0),
           st.lists(st.floats(-2, 2), min_size=1, max_size=4),
           st.lists(st.integers(-6, 6).filter(bool), max_size=5), st.booleans())
    def test_round_trip_fixed_point(self, V0, alpha, H, kappas, partners):
        cfg = RunConfig(V0=V0, alpha=alpha, H_list=H, kappa_list=kappas, partners=partners)
        once = parse(serialize(cfg))
        assert parse(serialize(once)) == once
        assert serialize(once) == serialize(parse(serialize(once)))
        assert once.V0 == pytest.approx(V0, rel=1e-11, abs=1e-300)

    def test_states_with_partners(self):
        cfg = golden_config(1)
        states = cfg.states()
        assert len(states) == 24 and len(set(states)) == 24
        assert len(cfg.replace(partners=False).states()) == 12


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("table", [1, 4])
def test_energies_match_table(tmp_path, capsys, table):
    out = tmp_path / "e.csv"
    code, _, _ = run(["energies", "--table", str(table), "--out", str(out), "--no-timestamp"],
                     capsys)
    assert code == 0
    meta, rows = read_csv(out)
    assert meta["table"] == str(table)
    assert list(rows[0]) == ["limit", "choice", "n", "kappa", "label", "H", "E_fm_inv", "branch",
                             "residual", "status"]
    ref = reference_energies(table)
    assert len(rows) == len(ref) == 48
    for row in rows:
        key = (int(row["n"]), int(row["kappa"]), float(row["H"]))
        assert float(row["E_fm_inv"]) == pytest.approx(ref[key], abs=1e-6)
        assert row["status"] == "ok"
    keys = [(int(r["n"]), abs(int(r["kappa"])), int(r["kappa"]) > 0, float(r["H"])) for r in rows]
    assert keys == sorted(keys)


def test_energies_deterministic_and_lf(tmp_path, capsys):
    paths = [tmp_path / f"{i}.csv" for i in range(2)]
    for p in paths:
        assert main(["energies", "--table", "2", "--out", str(p), "--no-timestamp"]) == 0
    a, b = (p.read_bytes() for p in paths)
    assert a == b and b"\r" not in a


def test_timestamp_only_in_metadata(tmp_path):
    p = tmp_path / "t.csv"
    main(["energies", "--table", "2", "--out", str(p)])
    lines = p.read_text().splitlines()
    stamped = [l for l in lines if "generated" in l]
    assert len(stamped) == 1 and stamped[0].startswith("#")


def test_empty_n_list_gives_header_only(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("limit = spin\nn_list =\nkappa_list = -2\n")
    code, out, _ = run(["energies", "--config", str(cfg), "--no-timestamp"], capsys)
    assert code == 0
    _, rows = read_csv(out)
    assert rows == []


def test_no_root_row_and_exit_code(tmp_path, capsys):
    cfg = tmp_path / "free.cfg"
    cfg.write_text("limit = spin\nV0 = 0\nV1 = 0\nn_list = 0\nkappa_list = -2\n")
    code, out, _ = run(["energies", "--config", str(cfg), "--no-timestamp"], capsys)
    assert code == 1
    _, rows = read_csv(out)
    assert rows[0]["status"] == "no-root"


def test_overrides(tmp_path, capsys):
    code, out, _ = run(["energies", "--table", "1", "--limit", "spin", "--branch", "minus",
                        "--no-timestamp"], capsys)
    meta, rows = read_csv(out)
    assert meta["limit"] == "spin" and meta["branch"] == "minus"
    assert all(r["limit"] == "spin" for r in rows)


@pytest.mark.parametrize("argv", [
    ["energies", "--config", "/nonexistent.cfg"],
    ["energies", "--table", "1", "--config", "x"],
    ["sweep", "--table", "1", "--param", "colour", "--from", "0", "--to", "1"],
    ["sweep", "--table", "1", "--param", "alpha", "--from", "0.01", "--to", "0.02", "--steps", "0"],
    ["verify", "nonsense"],
    ["wavefunction", "--table", "1", "--n", "1", "--kappa", "-1", "--r-min", "5", "--r-max", "1"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["energies", "--limit", "sideways"])
    assert info.value.code == 2


def test_bad_config_file(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("alpha = 0\n")
    assert main(["energies", "--config", str(cfg)]) == 2


def test_sweep_h_endpoints_match_table(capsys):
    code, out, _ = run(["sweep", "--table", "1", "--param", "H", "--from", "0", "--to", "0.5",
                        "--steps", "6", "--no-timestamp"], capsys)
    assert code == 0
    meta, rows = read_csv(out)
    assert meta["sweep"] == "H"
    ref = reference_energies(1)
    first, last = rows[0], rows[-1]
    for col in first:
        if col.startswith("E_"):
            n, kappa = map(int, col[2:].split("_"))
            assert float(first[col]) == pytest.approx(ref[(n, kappa, 0.0)], abs=1e-6)
            assert float(last[col]) == pytest.approx(ref[(n, kappa, 0.5)], abs=1e-6)


def test_single_step_sweep_equals_energies(capsys):
    _, out, _ = run(["sweep", "--table", "2", "--param", "alpha", "--from", "0.01", "--to", "0.5",
                     "--steps", "1", "--no-timestamp"], capsys)
    _, rows = read_csv(out)
    assert len(rows) == 1 and float(rows[0]["param_value"]) == 0.01
    _, out, _ = run(["energies", "--table", "2", "--no-timestamp"], capsys)
    _, erows = read_csv(out)
    energies = {(r["n"], r["kappa"]): r["E_fm_inv"] for r in erows if float(r["H"]) == 0.0}
    for col, val in rows[0].items():
        if col.startswith("E_"):
            n, kappa = col[2:].split("_")
            assert val == energies[(n, kappa)]


@pytest.mark.parametrize("table", [1, 2, 3, 4])
def test_alpha_sweep_is_continuous(capsys, table):
    _, out, _ = run(["sweep", "--table", str(table), "--param", "alpha", "--from", "0.005",
                     "--to", "0.05", "--steps", "31", "--no-timestamp"], capsys)
    _, rows = read_csv(out)
    cols = [c for c in rows[0] if c.startswith("E_")]
    for col in cols:
        e = np.array([float(r[col]) for r in rows])
        assert np.all(np.isfinite(e))
        steps = np.abs(np.diff(e))
        assert np.max(steps) <= 10 * np.median(steps)


@pytest.mark.parametrize("param,lo,hi", [("V0", 0.1, 0.3), ("V1", 0.05, 0.2)])
def test_potential_sweeps(capsys, param, lo, hi):
    code, out, _ = run(["sweep", "--table", "2", "--param", param, "--from", str(lo), "--to",
                        str(hi), "--steps", "5", "--no-timestamp"], capsys)
    assert code == 0
    _, rows = read_csv(out)
    assert len(rows) == 5


def test_wavefunction_output(tmp_path, capsys):
    paths = {}
    for H in ("0", "0.5"):
        p = tmp_path / f"wf{H}.csv"
        assert main(["wavefunction", "--table", "1", "--n", "1", "--kappa", "-1", "--H", H,
                     "--out", str(p), "--no-timestamp"]) == 0
        paths[H] = p
    meta, rows = read_csv(paths["0"])
    for key in ("E_fm_inv", "branch", "exp1", "exp2", "jacobi_a", "jacobi_b"):
        assert key in meta
    r = np.array([float(x["r"]) for x in rows])
    F = np.array([float(x["F"]) for x in rows])
    G = np.array([float(x["G"]) for x in rows])
    assert abs(G[0]) < 1e-6 * np.max(np.abs(G)) and abs(G[-1]) < 1e-6 * np.max(np.abs(G))
    assert simpson(F * F + G * G, x=r) == pytest.approx(1.0, abs=1e-6)
    _, rows5 = read_csv(paths["0.5"])
    F5 = np.array([float(x["F"]) for x in rows5])
    assert np.max(np.abs(F - F5)) > 1e-3 * np.max(np.abs(F))


def test_wavefunction_physics_failure(capsys):
    assert main(["wavefunction", "--table", "2", "--n", "0", "--kappa", "-2", "--branch",
                 "plus"]) == 1


def test_centrifugal_csv(capsys):
    code, out, _ = run(["centrifugal", "--points", "50", "--no-timestamp"], capsys)
    assert code == 0
    _, rows = read_csv(out)
    assert list(rows[0]) == ["r", "inverse_r2", "approx", "rel_error"]
    for row in rows:
        r = float(row["r"])
        assert float(row["inverse_r2"]) == pytest.approx(1 / r ** 2)


@pytest.mark.parametrize("suite", ["tables", "degeneracy", "shape-invariance", "riccati"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(["verify", suite], capsys)
    assert code == 0
    assert "FAIL" not in out and "PASS" in out


def test_verify_degeneracy_reports_split(capsys):
    _, out, _ = run(["verify", "degeneracy"], capsys)
    assert "intentionally split" in out


def test_verify_failure_exit_code(tmp_path, capsys):
    # the unsquared quasi-Yukawa tail does not reproduce the published spin table
    cfg = golden_config(4).replace(squared_tail=False)
    path = tmp_path / "t4.cfg"
    path.write_text(serialize(cfg))
    code, out, _ = run(["verify", "tables", "--config", str(path)], capsys)
    assert code == 1 and "FAIL" in out


def test_verify_tables_needs_table_key(tmp_path, capsys):
    path = tmp_path / "c.cfg"
    path.write_text("limit = spin\n")
    assert main(["verify", "tables", "--config", str(path)]) == 2
