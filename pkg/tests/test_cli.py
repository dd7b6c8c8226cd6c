import json
from pathlib import Path

from apimigrate.cli import main

BENCH = Path(__file__).resolve().parent.parent / "benchmarks"


def base_args(bench_name: str, out_dir: Path) -> list[str]:
    return [
        "--source-docs", str(BENCH / "source_docs.json"),
        "--target-docs", str(BENCH / "target_docs.json"),
        "--program", str(BENCH / bench_name / "program.src"),
        "--tests", str(BENCH / bench_name / "tests.json"),
        "--out-dir", str(out_dir),
    ]


def test_full_migration_exit_zero(tmp_path, capsys):
    code = main(base_args("01_scale_shift_relu", tmp_path))
    assert code == 0
    assert (tmp_path / "output_program.txt").exists()
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["totals"]["migrated"] == report["totals"]["lines"] == 3
    assert report["output_verified"] is True
    out = capsys.readouterr().out
    assert "migrated 3/3 lines" in out


def test_missing_program_flag_is_usage_error(tmp_path, capsys):
    code = main(["--source-docs", "x.json"])
    assert code == 1


def test_bad_path_is_config_error(tmp_path, capsys):
    args = base_args("01_scale_shift_relu", tmp_path)
    args[args.index("--program") + 1] = str(tmp_path / "missing.src")
    assert main(args) == 1
    assert "error:" in capsys.readouterr().err


def test_embedding_mode_requires_embeddings(tmp_path, capsys):
    args = base_args("01_scale_shift_relu", tmp_path) + ["--mode", "tfidf-embedding"]
    assert main(args) == 1


def test_partial_migration_exit_two(tmp_path, capsys):
    # top-k 1 cannot reach the sort API for the table benchmark's 2nd line
    args = base_args("08_table_report", tmp_path) + ["--top-k", "1"]
    code = main(args)
    assert code == 2
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["failure"]
    statuses = [line["status"] for line in report["lines"]]
    assert "failed" in statuses
    # partial output still contains the migrated prefix
    text = (tmp_path / "output_program.txt").read_text()
    assert "stratus.KeepAbove" in text


def test_embedding_mode_runs(tmp_path):
    args = base_args("08_table_report", tmp_path) + [
        "--mode", "tfidf-embedding",
        "--embeddings", str(BENCH / "embeddings.txt"),
    ]
    assert main(args) == 0


def test_custom_int_pool_flag(tmp_path):
    args = base_args("01_scale_shift_relu", tmp_path) + ["--int-pool", "0,1"]
    assert main(args) == 0


def test_report_flags_recorded(tmp_path):
    args = base_args("01_scale_shift_relu", tmp_path) + [
        "--no-spec-constraints", "--no-error-learning", "--seed", "9",
    ]
    assert main(args) == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["config"]["use_spec_constraints"] is False
    assert report["config"]["use_error_learning"] is False
    assert report["config"]["seed"] == 9
