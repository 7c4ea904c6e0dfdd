import json

from click.testing import CliRunner

from pairsieve.cli import main


def _run(args, **kwargs):
    return CliRunner().invoke(main, args, **kwargs)


class TestCount:
    def test_twin_100(self, tmp_path):
        res = _run(["count", "--kind", "twin", "--n", "100", "--out", str(tmp_path)])
        assert res.exit_code == 0, res.output
        rows = (tmp_path / "count.csv").read_text().splitlines()
        assert rows[0].startswith("n,kind,mode,direct")
        assert rows[1].split(",")[3] == "8"

    def test_json_format(self, tmp_path):
        res = _run(["count", "--kind", "goldbach", "--n", "10", "--format", "json",
                    "--out", str(tmp_path)])
        assert res.exit_code == 0
        payload = json.loads((tmp_path / "count.json").read_text())
        assert payload[0]["direct"] == 3

    def test_manifest_written(self, tmp_path):
        _run(["count", "--kind", "twin", "--n", "100", "--out", str(tmp_path)])
        manifest = json.loads((tmp_path / "count_manifest.json").read_text())
        assert manifest["subcommand"] == "count"
        assert "count.csv" in manifest["outputs"]


class TestScan:
    def test_goldbach_million_summary(self, tmp_path):
        res = _run(["scan", "--kind", "goldbach", "--x", "100000", "--out", str(tmp_path)])
        assert res.exit_code == 0, res.output
        summary = json.loads((tmp_path / "scan_summary.json").read_text())
        assert summary["count"] == 1
        assert (tmp_path / "scan_exceptional.txt").read_text() == "4\n"
        assert summary["A"] == 5.0

    def test_reproducible_bytes(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            _run(["scan", "--kind", "twin", "--x", "2000", "--workers", "4", "--out", str(out)])
        assert (a / "scan_summary.json").read_bytes() == (b / "scan_summary.json").read_bytes()
        assert (a / "scan_exceptional.txt").read_bytes() == (b / "scan_exceptional.txt").read_bytes()


class TestSeries:
    def test_columns_and_roundtrip(self, tmp_path):
        res = _run(["series", "--kind", "twin", "--n", "10000", "--out", str(tmp_path)])
        assert res.exit_code == 0, res.output
        header, row = (tmp_path / "series.csv").read_text().splitlines()
        assert header == "n,kind,C,crude_term,refined_term,actual,ratio,refined_ratio"
        fields = row.split(",")
        # numeric fields round-trip exactly through repr
        assert repr(float(fields[2])) == fields[2]
        assert repr(float(fields[6])) == fields[6]
        assert fields[5] == "205"


class TestDiff:
    def test_record_emitted(self, tmp_path):
        res = _run(["diff", "--n1", "400", "--n2", "100", "--format", "json",
                    "--out", str(tmp_path)])
        assert res.exit_code == 0, res.output
        payload = json.loads((tmp_path / "diff.json").read_text())
        assert payload[0]["p_min"] == 11
        assert payload[0]["diff_below_width"] is True


class TestVerify:
    def test_axioms_pass(self, tmp_path):
        res = _run(["verify", "axioms", "--cases", "200", "--seed", "42",
                    "--out", str(tmp_path)])
        assert res.exit_code == 0, res.output
        summary = json.loads((tmp_path / "axioms_summary.json").read_text())
        assert summary["ok"] is True

    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            _run(["verify", "axioms", "--cases", "100", "--seed", "5", "--out", str(out)])
        assert (a / "axioms_summary.json").read_bytes() == (b / "axioms_summary.json").read_bytes()


class TestUsageErrors:
    def test_unknown_kind_exits_2(self):
        assert _run(["count", "--kind", "bogus", "--n", "10"]).exit_code == 2

    def test_missing_required_option_exits_2(self):
        assert _run(["scan", "--kind", "twin"]).exit_code == 2

    def test_env_var_out_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("PAIRSIEVE_OUT", str(tmp_path / "envout"))
        res = _run(["count", "--kind", "twin", "--n", "100"])
        assert res.exit_code == 0
        assert (tmp_path / "envout" / "count.csv").exists()
