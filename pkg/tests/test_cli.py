import json

import pytest

from graphene_revivals import FieldParams, SpectrumModel, convert, timescales
from graphene_revivals.cli import (RunConfig, config_from_output, main,
                                   parse_config_lines)


def run_cli(*argv):
    return main(list(argv))


def read_csv(path):
    header = []
    columns = None
    rows = []
    trailer = []
    with open(path) as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                (header if columns is None else trailer).append(line)
            elif columns is None:
                columns = line.split(",")
            else:
                rows.append(line.split(","))
    return header, columns, rows, trailer


def test_timescales_csv(tmp_path):
    out = tmp_path / "ts.csv"
    assert run_cli("timescales", "--B", "10", "--n0", "15", "--out", str(out)) == 0
    _, columns, rows, _ = read_csv(out)
    assert columns == ["quantity", "value"]
    table = {k: float(v) for k, v in rows}
    model = SpectrumModel(FieldParams(10.0))
    ts = timescales(model, 15)
    assert table["t_cl_fs"] == pytest.approx(convert(ts.t_classical, "s", "fs"), rel=1e-12)
    assert table["t_r_ps"] == pytest.approx(convert(ts.t_revival, "s", "ps"), rel=1e-12)
    assert table["t_zb_fs"] == pytest.approx(convert(ts.t_zitterbewegung, "s", "fs"), rel=1e-12)
    assert table["t_zb_gap_fs"] == pytest.approx(table["t_zb_fs"], rel=1e-12)
    assert table["ratio_t_r_over_t_cl"] == pytest.approx(60.0, rel=1e-12)
    assert table["ratio_t_r_over_t_zb"] == pytest.approx(3600.0, rel=1e-12)
    assert table["hbar_omega_mev"] == pytest.approx(114.73551817528936, rel=1e-12)
    assert table["magnetic_length_nm"] == pytest.approx(8.113026294469947, rel=1e-12)


def test_timescales_field_scaling(tmp_path):
    vals = {}
    for b in ("10", "40"):
        out = tmp_path / f"ts{b}.csv"
        assert run_cli("timescales", "--B", b, "--n0", "15", "--out", str(out)) == 0
        _, _, rows, _ = read_csv(out)
        vals[b] = {k: float(v) for k, v in rows}
    for key in ("t_cl_fs", "t_r_ps", "t_zb_fs"):
        assert vals["40"][key] == pytest.approx(vals["10"][key] / 2, rel=1e-12)


def test_timescales_json(tmp_path):
    out = tmp_path / "ts.json"
    assert run_cli("timescales", "--n0", "11", "--format", "json",
                   "--out", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["command"] == "timescales"
    assert doc["config"]["n0"] == 11
    table = {k: v for k, v in doc["rows"]}
    assert table["ratio_t_r_over_t_cl"] == pytest.approx(44.0, rel=1e-12)


def test_autocorr_first_row_is_unity(tmp_path):
    out = tmp_path / "a.csv"
    assert run_cli("autocorr", "--n0", "15", "--sigma", "3",
                   "--samples", "512", "--out", str(out)) == 0
    _, columns, rows, _ = read_csv(out)
    assert columns == ["t_fs", "re_A", "im_A", "abs2_A"]
    assert float(rows[0][0]) == 0.0
    assert float(rows[0][3]) == pytest.approx(1.0, abs=1e-12)
    assert len(rows) == 512


def test_repeated_runs_byte_identical(tmp_path):
    args = ["autocorr", "--n0", "15", "--sigma", "3", "--samples", "700"]
    f1, f2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    assert run_cli(*args, "--out", str(f1)) == 0
    assert run_cli(*args, "--out", str(f2)) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_current_two_band_jx_zero(tmp_path):
    out = tmp_path / "c.csv"
    assert run_cli("current", "--bands", "both", "--samples", "512",
                   "--t-end-fs", "100", "--out", str(out)) == 0
    _, columns, rows, _ = read_csv(out)
    assert columns == ["t_fs", "jx_evf", "jy_evf"]
    assert all(r[1] == "0" for r in rows)
    assert float(rows[0][2]) == 0.0


def test_valley_doubling_in_cli(tmp_path):
    base = ["current", "--bands", "pos", "--samples", "256", "--t-end-fs", "500"]
    f1, f2 = tmp_path / "k1.csv", tmp_path / "k2.csv"
    assert run_cli(*base, "--valleys", "k1", "--out", str(f1)) == 0
    assert run_cli(*base, "--valleys", "both", "--out", str(f2)) == 0
    _, _, rows1, _ = read_csv(f1)
    _, _, rows2, _ = read_csv(f2)
    for r1, r2 in zip(rows1, rows2):
        assert float(r2[1]) == pytest.approx(2 * float(r1[1]), rel=1e-15)
        assert float(r2[2]) == pytest.approx(2 * float(r1[2]), rel=1e-15)


def test_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment line\nn0 = 11\nsigma = 40.0\nsamples = 128\n")
    out = tmp_path / "o.csv"
    # flag wins over the config file
    assert run_cli("autocorr", "--config", str(cfg), "--n0", "15",
                   "--out", str(out)) == 0
    command, parsed = config_from_output(str(out))
    assert command == "autocorr"
    assert parsed.n0 == 15
    assert parsed.sigma == 40.0
    assert parsed.samples == 128


def test_parse_echo_rerun_closure(tmp_path):
    f1, f2 = tmp_path / "a1.csv", tmp_path / "a2.csv"
    assert run_cli("autocorr", "--n0", "15", "--sigma", "3", "--samples", "300",
                   "--out", str(f1)) == 0
    command, cfg = config_from_output(str(f1))
    # write the echoed config back out and rerun from it alone
    cfg_file = tmp_path / "echo.cfg"
    lines = [f"{k} = {v!r}" if isinstance(v, float) else f"{k} = {str(v).lower()}"
             if isinstance(v, bool) else f"{k} = {v}"
             for k, v in cfg.__dict__.items()]
    cfg_file.write_text("\n".join(lines) + "\n")
    assert run_cli(command, "--config", str(cfg_file), "--out", str(f2)) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_json_output_round_trip(tmp_path):
    out = tmp_path / "a.json"
    assert run_cli("autocorr", "--samples", "64", "--format", "json",
                   "--out", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["columns"] == ["t_fs", "re_A", "im_A", "abs2_A"]
    assert doc["rows"][0][3] == pytest.approx(1.0, abs=1e-12)
    command, cfg = config_from_output(str(out))
    assert command == "autocorr" and cfg.samples == 64


def test_bad_flag_value_exits_1(tmp_path, capsys):
    assert run_cli("autocorr", "--B", "-3") == 1
    assert run_cli("autocorr", "--bands", "pos", "--sigma", "-1") == 1


def test_unknown_config_key_exits_1(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("voltage = 3\n")
    assert run_cli("autocorr", "--config", str(cfg)) == 1


def test_missing_config_file_exits_1(tmp_path):
    assert run_cli("autocorr", "--config", str(tmp_path / "nope.cfg")) == 1


def test_runtime_error_exits_2(tmp_path):
    # grid far too short for revival classification
    assert run_cli("gamma-scan", "--t-end-fs", "100", "--samples", "64",
                   "--out", str(tmp_path / "x.csv")) == 2


def test_gamma_scan_zero_range(tmp_path):
    out = tmp_path / "g.csv"
    assert run_cli("gamma-scan", "--gamma-mev", "0", "--samples", "8192",
                   "--out", str(out)) == 0
    _, columns, rows, trailer = read_csv(out)
    assert columns[0] == "gamma_mev"
    assert len(rows) == 1
    assert float(rows[0][0]) == 0.0
    # unbroadened single-band current: half and full stations survive
    row = dict(zip(columns, rows[0]))
    assert row["half_class"] == "full"
    assert row["full_class"] == "full"
    assert any("gamma_max_mev" in t for t in trailer)


def test_gamma_scan_monotone_visibility(tmp_path):
    out = tmp_path / "g2.csv"
    assert run_cli("gamma-scan", "--gamma-mev", "2.0", "--samples", "8192",
                   "--out", str(out)) == 0
    _, columns, rows, _ = read_csv(out)
    rank = {"full": 2, "fractional": 1, "absent": 0}
    for tag in ("quarter", "half", "three_quarter", "full"):
        col = columns.index(f"{tag}_class")
        grades = [rank[r[col]] for r in rows]
        assert grades == sorted(grades, reverse=True)


def test_parse_config_lines_reports_location():
    with pytest.raises(ValueError, match="cfg:2"):
        parse_config_lines(["n0 = 15", "what is this"], source="cfg")


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(bands="positive")  # flag vocabulary only
    with pytest.raises(ValueError):
        RunConfig(valleys="k2")
    with pytest.raises(ValueError):
        RunConfig(format="xml")
    with pytest.raises(ValueError):
        RunConfig(samples=1)
