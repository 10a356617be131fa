"""CLI behavior: flags, config files, outputs, determinism, exit codes."""

from __future__ import annotations

import json

from gaussbalance.cli import main
from gaussbalance.report import dumps, render_csv_table


class TestReportSerialization:
    def test_floats_are_17_digit(self):
        text = dumps({"x": 1.0 / 3.0})
        assert text == '{"x":0.33333333333333331}'
        assert json.loads(text)["x"] == 1.0 / 3.0

    def test_sorted_keys_and_specials(self):
        text = dumps({"b": float("inf"), "a": None, "c": True})
        assert text == '{"a":null,"b":"inf","c":true}'

    def test_csv_table(self):
        table = {"name": "t", "columns": ["a", "b"], "rows": [[1, 0.5], [2, None]]}
        text = render_csv_table(table)
        lines = text.strip().split("\n")
        assert lines[0].startswith("# schema=gaussbalance-report/1")
        assert lines[1] == "a,b"
        assert lines[2] == "1,0.5"
        assert lines[3] == "2,"


class TestCli:
    def test_bounds_table_csv(self, tmp_path, capsys):
        out = tmp_path / "report.csv"
        code = main(["bounds-table", "--p", "0.5", "--out", str(out), "--format", "csv"])
        assert code == 0
        captured = capsys.readouterr().out
        assert "[PASS]" in captured
        text = out.read_text()
        assert text.startswith("# schema=gaussbalance-report/1")
        profile = (tmp_path / "report_bound_profile.csv").read_text()
        lines = profile.strip().split("\n")
        assert lines[1] == "p,f,f_alpha,f_beta,q"
        row = lines[2].split(",")
        # f(0.5) = (2 inv_psi(1/2))^{-1} = 0.74130..., emitted at 17 digits
        assert abs(float(row[1]) - 0.74130) < 1e-5
        assert len(row[1]) >= 17

    def test_verify_cone_json(self, tmp_path):
        out = tmp_path / "cone.json"
        code = main(["verify-cone", "--p", "0.25", "--grid", "50", "--out", str(out)])
        assert code == 0
        report = json.loads(out.read_text())
        assert report["passed"] is True
        assert report["command"] == "verify-cone"
        gap = report["checks"][0]["detail"]["max_gap"]
        assert gap < 0.0

    def test_deterministic_reports(self, tmp_path):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        args = ["verify-planar", "--seed", "42", "--samples", "25", "--grid", "50"]
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_all_seed_42_byte_identical(self, tmp_path):
        out1 = tmp_path / "all1.json"
        out2 = tmp_path / "all2.json"
        args = ["all", "--seed", "42", "--samples", "20", "--grid", "50"]
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_config_file_replaces_flags(self, tmp_path):
        cfg = tmp_path / "run.json"
        out = tmp_path / "from_config.json"
        cfg.write_text(json.dumps({
            "command": "bounds-table",
            "p_list": [0.25],
            "seed": 7,
            "out": str(out),
            "format": "json",
        }))
        code = main(["verify-cone", "--config", str(cfg)])
        assert code == 0
        report = json.loads(out.read_text())
        assert report["command"] == "bounds-table"
        assert report["seed"] == 7

    def test_bad_tol_is_usage_error(self):
        assert main(["bounds-table", "--tol", "oops"]) == 2

    def test_counterexample_runs(self, tmp_path, capsys):
        out = tmp_path / "ce.json"
        assert main(["counterexample", "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        table = report["tables"][0]
        assert table["columns"] == ["p", "t", "d", "s", "gamma", "delta", "beta_lb"]
        assert len(table["rows"]) == 3


class TestThreadCap:
    def test_env_var_parsing(self, monkeypatch):
        from gaussbalance.suites import max_workers

        monkeypatch.setenv("GAUSSBALANCE_THREADS", "4")
        assert max_workers() == 4
        monkeypatch.setenv("GAUSSBALANCE_THREADS", "bogus")
        assert max_workers() == 1

    def test_parallel_results_match_sequential(self, monkeypatch):
        from gaussbalance.report import dumps
        from gaussbalance.suites import SuiteOptions, run_command

        opts = SuiteOptions(p_list=(0.25, 0.4), grid=40)
        monkeypatch.setenv("GAUSSBALANCE_THREADS", "1")
        seq = run_command("verify-cone", opts)
        monkeypatch.setenv("GAUSSBALANCE_THREADS", "3")
        par = run_command("verify-cone", opts)
        assert dumps(seq) == dumps(par)
