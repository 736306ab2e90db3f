"""Sweep driver, file formats, and the command-line front-end."""

import json
import math
import subprocess
import sys

import pytest

from parampstats import (
    CSV_HEADER,
    FIGURE_SV_FILES,
    FilterSpec,
    MultimodeLimitScheme,
    ParampParams,
    SingleModeScheme,
    SweepConfig,
    emit_figure_sv,
    padurariu_reference,
    run_sweep,
    write_csv,
    write_json,
)
from parampstats.cli import main

TAU = 1.0 / (4.0 * math.pi)


def _single_config(xi_grid, width=1e-3, **kwargs):
    return SweepConfig(
        base=ParampParams(gamma=1.0, xi_mag=0.0),
        xi_grid=xi_grid,
        delta_grid=(0.0,),
        scheme=SingleModeScheme(FilterSpec("rectangular", width)),
        **kwargs,
    )


class TestRunSweep:
    def test_zero_drive_gives_zero_record(self):
        result = run_sweep(_single_config((0.0,)))
        assert len(result.records) == 1
        rec = result.records[0]
        assert rec.mean == 0.0
        assert rec.variance == 0.0
        assert rec.third == 0.0
        assert rec.fano is None
        assert not result.skipped

    def test_narrow_filter_tracks_reference(self):
        result = run_sweep(_single_config((0.2, 0.5, 0.8)))
        for rec in result.records:
            expect = 2.0 * rec.mean * (rec.mean + 1.0)
            assert rec.variance == pytest.approx(expect, rel=1e-3)

    def test_multimode_limit_tracks_cubic(self):
        cfg = SweepConfig(
            base=ParampParams(gamma=1.0, xi_mag=0.0),
            xi_grid=(0.1, 0.5, 0.9),
            delta_grid=(0.0,),
            scheme=MultimodeLimitScheme(TAU),
        )
        for rec in run_sweep(cfg).records:
            assert rec.variance == pytest.approx(
                padurariu_reference(rec.mean), rel=1e-8
            )
            assert rec.third is None
            assert rec.tau == TAU

    def test_unstable_points_are_skipped_not_dropped(self):
        result = run_sweep(_single_config((0.5, 1.0, 2.0)))
        assert len(result.records) == 1
        assert len(result.skipped) == 2
        assert result.skipped[0][0] == 1.0
        assert "stab" in result.skipped[0][2]

    def test_grid_order_is_xi_major(self):
        cfg = SweepConfig(
            base=ParampParams(gamma=1.0, xi_mag=0.0),
            xi_grid=(0.2, 0.4),
            delta_grid=(0.0, 0.3),
            scheme=SingleModeScheme(FilterSpec("rectangular", 1e-3)),
        )
        recs = run_sweep(cfg).records
        assert [(r.xi, r.delta) for r in recs] == [
            (0.2, 0.0), (0.2, 0.3), (0.4, 0.0), (0.4, 0.3)
        ]

    def test_config_validation(self):
        with pytest.raises(ValueError):
            _single_config(())
        with pytest.raises(ValueError):
            _single_config((0.5,), output_format="yaml")


class TestFileFormats:
    def test_csv_layout(self, tmp_path):
        path = tmp_path / "out.csv"
        result = run_sweep(_single_config((0.0, 0.5)))
        write_csv(result.records, path)
        text = path.read_text()
        lines = text.split("\n")
        assert lines[0] == CSV_HEADER
        assert CSV_HEADER == "scheme,xi,delta,tau,mean,variance,third,fano,quad_err"
        assert len(lines) == 4 and lines[-1] == ""  # trailing newline
        zero_row = lines[1].split(",")
        assert zero_row[0] == "single_mode"
        assert zero_row[3] == ""  # no tau for this scheme
        assert zero_row[7] == ""  # no fano at zero mean

    def test_csv_round_trips_at_full_precision(self, tmp_path):
        path = tmp_path / "out.csv"
        result = run_sweep(_single_config((0.3, 0.7)))
        write_csv(result.records, path)
        rows = path.read_text().splitlines()[1:]
        for rec, row in zip(result.records, rows):
            fields = row.split(",")
            assert float(fields[1]) == rec.xi
            assert float(fields[4]) == rec.mean
            assert float(fields[5]) == rec.variance
            assert float(fields[6]) == rec.third

    def test_csv_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        write_csv(run_sweep(_single_config((0.25, 0.65))).records, a)
        write_csv(run_sweep(_single_config((0.25, 0.65))).records, b)
        assert a.read_bytes() == b.read_bytes()

    def test_json_echoes_config(self, tmp_path):
        path = tmp_path / "out.json"
        cfg = _single_config((0.5, 1.5))
        write_json(cfg, run_sweep(cfg), path)
        data = json.loads(path.read_text())
        assert data["config"]["xi_grid"] == [0.5, 1.5]
        assert data["config"]["scheme"]["label"] == "single_mode"
        assert len(data["records"]) == 1
        assert len(data["skipped"]) == 1
        # record fields carry the CSV header names
        assert set(data["records"][0]) == set(CSV_HEADER.split(","))


class TestFigureFiles:
    def test_files_headers_and_reference_curve(self, tmp_path):
        paths = emit_figure_sv(tmp_path)
        assert [p.name for p in paths] == list(FIGURE_SV_FILES)
        for p in paths:
            lines = p.read_text().split("\n")
            assert lines[0] == "xi_over_gamma,mean,variance"
            assert len(lines) == 21  # header + 19 drives + newline
        tau_file = tmp_path / "tau_4pi_gamma.csv"
        for row in tau_file.read_text().splitlines()[1:]:
            _, mean, var = (float(tok) for tok in row.split(","))
            assert var == pytest.approx(padurariu_reference(mean), rel=1e-8)

    def test_reruns_are_byte_identical(self, tmp_path):
        first = {
            p.name: p.read_bytes() for p in emit_figure_sv(tmp_path / "one")
        }
        second = {
            p.name: p.read_bytes() for p in emit_figure_sv(tmp_path / "two")
        }
        assert first == second


class TestCli:
    def test_coeffs_output(self, capsys):
        assert main(["coeffs", "--xi", "0.5"]) == 0
        out = capsys.readouterr().out
        values = dict(line.split("=") for line in out.strip().splitlines())
        assert float(values["u_real"]) == pytest.approx(5.0 / 3.0)
        assert float(values["v_real"]) == pytest.approx(4.0 / 3.0)
        assert float(values["eta"]) == pytest.approx(math.log(3.0))

    def test_spectrum_table(self, capsys):
        assert main(["spectrum", "--xi", "0.5", "--points", "11"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "nu,eta,n,phi_c,phi_s"
        assert len(lines) == 12
        center = lines[6].split(",")
        assert float(center[0]) == 0.0
        assert float(center[2]) == pytest.approx(16.0 / 9.0)

    def test_moments_single(self, capsys):
        code = main(
            ["moments", "--xi", "0.5", "--filter-width", "1e-3"]
        )
        assert code == 0
        out = capsys.readouterr().out
        values = dict(line.split("=") for line in out.strip().splitlines())
        assert float(values["mean"]) == pytest.approx(16.0 / 9.0, rel=1e-4)

    def test_sweep_with_config_and_override(self, tmp_path, capsys):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(
            "# demo sweep\n"
            "gamma = 1.0\n"
            "scheme = single_mode\n"
            "filter_width = 1e-3\n"
            "xi_grid = 0.2,0.4\n"
            "output = {}\n".format(tmp_path / "a.csv")
        )
        assert main(["sweep", "--config", str(cfg)]) == 0
        assert (tmp_path / "a.csv").read_text().count("\n") == 3

        # flag overrides beat file values
        out_b = tmp_path / "b.csv"
        code = main(
            ["sweep", "--config", str(cfg), "--xi-grid", "0.1:0.5:5",
             "--output", str(out_b)]
        )
        assert code == 0
        assert out_b.read_text().count("\n") == 6
        capsys.readouterr()

    def test_sweep_reports_skips_on_stderr(self, tmp_path, capsys):
        code = main(
            ["sweep", "--scheme", "single_mode", "--filter-width", "1e-3",
             "--xi-grid", "0.5,1.5", "--output", str(tmp_path / "s.csv")]
        )
        assert code == 0
        err = capsys.readouterr().err
        assert "skipped" in err and "1.5" in err

    def test_config_errors_exit_1(self, tmp_path, capsys):
        assert main(["sweep", "--xi-grid", "0.5"]) == 1  # no filter width
        assert main(["sweep", "--config", "/no/such/file.cfg"]) == 1
        assert main(["moments", "--xi", "0.5", "--scheme", "wideband",
                     "--filter-width", "1.0"]) == 1  # missing nu0
        bad = tmp_path / "bad.cfg"
        bad.write_text("this line has no equals sign\n")
        assert main(["sweep", "--config", str(bad)]) == 1
        assert main(["coeffs", "--xi", "1.5"]) == 1  # unstable
        capsys.readouterr()

    def test_numerical_failure_exits_2(self, capsys):
        code = main(
            ["moments", "--xi", "0.5", "--scheme", "multimode-finite",
             "--tau", "0.1", "--mode-spacing", "0.1", "--mode-cutoff", "5"]
        )
        assert code == 2
        assert "numerical" in capsys.readouterr().err

    def test_output_io_exits_3(self, tmp_path, capsys):
        code = main(
            ["sweep", "--scheme", "single_mode", "--filter-width", "1e-3",
             "--xi-grid", "0.5", "--output",
             str(tmp_path / "missing" / "dir" / "x.csv")]
        )
        assert code == 3
        capsys.readouterr()

    def test_figure_sv_command(self, tmp_path, capsys):
        assert main(["figure-sv", "--outdir", str(tmp_path / "fig")]) == 0
        printed = capsys.readouterr().out.strip().splitlines()
        assert len(printed) == 5
        assert (tmp_path / "fig" / "single_mode.csv").exists()

    def test_console_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "parampstats.cli", "coeffs", "--xi", "0.5"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert proc.returncode == 0
        assert "u_real=" in proc.stdout

    def test_verify_battery_passes(self, capsys):
        assert main(["verify"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.count("PASS") >= 7
