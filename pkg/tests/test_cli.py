"""End-to-end checks of the flipcool command line interface."""

import json

import pytest

from flipcool.cli import main
from flipcool.experiments import read_csv

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def run_cli(*argv):
    return main(list(argv))


class TestSimulate:
    def test_worst_length_4_is_deterministic(self, tmp_path, capsys):
        out = tmp_path / "runs.csv"
        code = run_cli(
            "simulate", "--mode", "worst", "--n-list", "4",
            "--reps", "20", "--seed", "7", "--out", str(out),
        )
        assert code == 0
        records = read_csv(out)
        assert len(records) == 20
        assert all(r.T == 1 for r in records)
        assert "20 runs in" in capsys.readouterr().err

    def test_uniform_length_2_never_moves(self, tmp_path):
        out = tmp_path / "runs.csv"
        assert run_cli(
            "simulate", "--mode", "uniform", "--n-list", "2",
            "--reps", "15", "--out", str(out),
        ) == 0
        assert all(r.T == 0 for r in read_csv(out))

    def test_csv_header_and_times(self, tmp_path):
        out = tmp_path / "runs.csv"
        run_cli(
            "simulate", "--mode", "natural", "--n-list", "4,6",
            "--reps", "2", "--out", str(out),
        )
        lines = out.read_text().splitlines()
        assert lines[0] == "n,mode,replicate,seed,T,wall_time_s"
        assert len(lines) == 5
        assert all(line.endswith(",0.000000") for line in lines[1:])

    def test_repeat_invocations_are_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["--mode", "natural", "--n-list", "6,8", "--reps", "6", "--seed", "5"]
        run_cli("simulate", *args, "--out", str(a))
        run_cli("simulate", *args, "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_worker_pool_is_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["--mode", "uniform", "--n-list", "8", "--reps", "10", "--seed", "2"]
        run_cli("simulate", *args, "--out", str(a))
        run_cli("simulate", *args, "--workers", "2", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_word_mode_and_summary(self, tmp_path):
        out = tmp_path / "runs.csv"
        summary = tmp_path / "summary.json"
        run_cli(
            "simulate", "--mode", "word", "--word", "111222",
            "--reps", "8", "--out", str(out), "--summary", str(summary),
        )
        records = read_csv(out)
        assert all(r.n == 6 and r.T >= 1 for r in records)
        (row,) = json.loads(summary.read_text())
        assert row["n"] == 6 and row["reps"] == 8
        assert row["mean_T"] == pytest.approx(
            sum(r.T for r in records) / len(records)
        )

    def test_figure_output(self, tmp_path):
        out = tmp_path / "runs.csv"
        fig = tmp_path / "runs.png"
        run_cli(
            "simulate", "--mode", "worst", "--n-list", "4,6,8",
            "--reps", "3", "--out", str(out), "--fig", str(fig),
        )
        assert fig.read_bytes()[:8] == PNG_MAGIC

    @pytest.mark.parametrize(
        "argv",
        [
            ("simulate", "--mode", "worst", "--n-list", "5", "--out", "x.csv"),
            ("simulate", "--mode", "worst", "--n-list", "0", "--out", "x.csv"),
            ("simulate", "--mode", "word", "--out", "x.csv"),
            ("simulate", "--mode", "word", "--word", "1112", "--out", "x.csv"),
            ("simulate", "--mode", "worst", "--word", "1122", "--n-list", "4",
             "--out", "x.csv"),
            ("simulate", "--mode", "worst", "--out", "x.csv"),
            ("simulate", "--mode", "worst", "--n-list", "4", "--reps", "0",
             "--out", "x.csv"),
            ("simulate", "--mode", "worst", "--n-list", "4", "--workers", "0",
             "--out", "x.csv"),
        ],
    )
    def test_usage_errors(self, argv):
        with pytest.raises(SystemExit) as err:
            run_cli(*argv)
        assert err.value.code == 2

    def test_unwritable_output_reports_error(self, tmp_path, capsys):
        missing = tmp_path / "no-such-dir" / "runs.csv"
        code = run_cli(
            "simulate", "--mode", "worst", "--n-list", "4",
            "--reps", "1", "--out", str(missing),
        )
        assert code == 2
        assert "error:" in capsys.readouterr().err


class TestFit:
    @pytest.fixture()
    def worst_csv(self, tmp_path):
        out = tmp_path / "runs.csv"
        run_cli(
            "simulate", "--mode", "worst", "--n-list", "8,12,16,20",
            "--reps", "5", "--seed", "1", "--out", str(out),
        )
        return out

    def test_reports_fit(self, worst_csv, capsys):
        assert run_cli("fit", "--in", str(worst_csv), "--model", "cubic") == 0
        out = capsys.readouterr().out
        assert "model: cubic" in out
        assert "c: " in out
        assert "relative rms residual: " in out
        assert "log-log slope: " in out
        assert "  n=8: mean T " in out

    def test_figure_output(self, worst_csv, tmp_path, capsys):
        fig = tmp_path / "fit.png"
        run_cli(
            "fit", "--in", str(worst_csv), "--model", "cubic", "--fig", str(fig)
        )
        capsys.readouterr()
        assert fig.read_bytes()[:8] == PNG_MAGIC

    def test_too_few_lengths(self, tmp_path, capsys):
        out = tmp_path / "runs.csv"
        run_cli(
            "simulate", "--mode", "worst", "--n-list", "4,6",
            "--reps", "2", "--out", str(out),
        )
        code = run_cli("fit", "--in", str(out), "--model", "cubic")
        assert code == 2
        assert "at least 3 distinct" in capsys.readouterr().err

    def test_unknown_model_rejected_by_parser(self, worst_csv):
        with pytest.raises(SystemExit) as err:
            run_cli("fit", "--in", str(worst_csv), "--model", "quartic")
        assert err.value.code == 2


class TestVerify:
    def test_small_sweep_passes_with_known_discrepancies(self, tmp_path, capsys):
        report = tmp_path / "report.json"
        code = run_cli(
            "verify", "--max-n", "6", "--alphas", "0.25,0.5,0.75",
            "--json", str(report),
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "DISCREPANCY" in out
        assert "variant-vs-volume" in out
        assert ", 0 failed" in out.splitlines()[-1]
        rows = json.loads(report.read_text())
        assert {r["status"] for r in rows} == {"pass", "discrepancy"}
        assert all({"name", "status", "detail"} <= set(r) for r in rows)

    @pytest.mark.parametrize(
        "argv",
        [
            ("verify", "--max-n", "16"),
            ("verify", "--max-n", "7"),
            ("verify", "--max-n", "4", "--alphas", "0.5,1.5"),
        ],
    )
    def test_usage_errors(self, argv):
        with pytest.raises(SystemExit) as err:
            run_cli(*argv)
        assert err.value.code == 2


class TestOracle:
    def test_text_report_for_near_ground_word(self, capsys):
        assert run_cli("oracle", "--word", "1122") == 0
        out = capsys.readouterr().out
        assert "word:    1122" in out
        assert "energy:  2" in out
        assert "volume:  4" in out
        assert "letters 1..4 at height 0 (+), 2 ones" in out
        assert "letters 2..3 at height 1 (+), 1 ones" in out
        assert "exact E[T]: 1.000000" in out

    def test_json_report_matches_text_facts(self, capsys):
        assert run_cli("oracle", "--word", "1122", "--format", "json") == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["energy"] == 2
        assert payload["volume"] == 4.0
        assert payload["expected_T"] == 1.0
        assert [f["span"] for f in payload["factors"]] == [[1, 4], [2, 3]]
        assert [f["height"] for f in payload["factors"]] == [0, 1]
        assert all(f["sign"] == 1 for f in payload["factors"])

    def test_ground_state_report(self, capsys):
        run_cli("oracle", "--word", "1212", "--format", "json")
        payload = json.loads(capsys.readouterr().out)
        assert payload["energy"] == 0
        assert payload["expected_T"] == 0.0
        assert len(payload["factors"]) == 1

    def test_long_word_omits_exact_solve(self, capsys):
        word = "11211121222112212222211222112111211212"
        run_cli("oracle", "--word", word)
        out = capsys.readouterr().out
        assert "energy:  18" in out
        assert "exact E[T]: omitted (needs length <= 14" in out
        assert "tuned alpha" in out

    def test_custom_alphas(self, capsys):
        run_cli("oracle", "--word", "1122", "--alphas", "0.5", "--format", "json")
        payload = json.loads(capsys.readouterr().out)
        (variant,) = payload["variants"]
        assert variant["alpha"] == 0.5
        assert variant["phi"] == pytest.approx(3**0.5 + 2**0.5)

    @pytest.mark.parametrize(
        "argv",
        [
            ("oracle", "--word", "1123"),
            ("oracle", "--word", "112"),
            ("oracle", "--word", "1122", "--alphas", "0"),
        ],
    )
    def test_usage_errors(self, argv):
        with pytest.raises(SystemExit) as err:
            run_cli(*argv)
        assert err.value.code == 2


class TestTopLevel:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as err:
            run_cli("--version")
        assert err.value.code == 0
        assert "flipcool" in capsys.readouterr().out

    def test_no_subcommand_is_an_error(self):
        with pytest.raises(SystemExit) as err:
            run_cli()
        assert err.value.code == 2
