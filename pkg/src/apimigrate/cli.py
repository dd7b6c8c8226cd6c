"""Command-line front end.

Exit codes: 0 full migration, 2 partial, 1 usage/config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import DEFAULT_INT_POOL, load_corpus
from .errors import MigrationError
from .matching import load_embeddings
from .orchestrator import MigrationConfig, MigrationReport, report_to_json, synthesize
from .program import load_tests, parse_program
from .runtime import MockRuntimeAdapter, spawn_external


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="migrate",
        description="Rewrite a straight-line program from a source library's "
        "API to a target library's API, guided by documentation and tests.",
    )
    p.add_argument("--source-docs", required=True, help="source library corpus (JSON)")
    p.add_argument("--target-docs", required=True, help="target library corpus (JSON)")
    p.add_argument("--program", required=True, help="program file in the mini call syntax")
    p.add_argument("--tests", required=True, help="whole-program tests (JSON)")
    p.add_argument("--mode", choices=["tfidf", "tfidf-embedding"], default="tfidf")
    p.add_argument("--embeddings", help="GloVe-style embedding file (needed for tfidf-embedding)")
    p.add_argument("--top-k", type=int, default=200)
    p.add_argument("--max-sketch-size", type=int, default=2)
    p.add_argument("--no-spec-constraints", action="store_true")
    p.add_argument("--no-error-learning", action="store_true")
    p.add_argument("--timeout", type=float, default=3600.0, help="global timeout in seconds")
    p.add_argument("--budget", type=int, default=10_000, help="assignments per sketch")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--int-pool",
        default=",".join(str(v) for v in DEFAULT_INT_POOL),
        help="comma-separated integer seed pool",
    )
    p.add_argument("--classical-tfidf", action="store_true", help="use log-idf weighting")
    backend = p.add_mutually_exclusive_group()
    backend.add_argument("--adapter", help="command for an external target-side adapter")
    backend.add_argument("--mock", action="store_true", help="in-process mock runtime (default)")
    p.add_argument("--out-dir", default=".", help="where output program and report are written")
    return p


def report_emit(report: MigrationReport, config: MigrationConfig, path: str | Path) -> None:
    """Serialize per-line metrics (time, candidates, rank) as JSON."""
    Path(path).write_text(json.dumps(report_to_json(report, config), indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0

    try:
        int_pool = tuple(int(v) for v in args.int_pool.split(",") if v.strip())
    except ValueError:
        print(f"error: bad --int-pool {args.int_pool!r}", file=sys.stderr)
        return 1

    mode = args.mode.replace("-", "_")
    if mode == "tfidf_embedding" and not args.embeddings:
        print("error: --mode tfidf-embedding requires --embeddings", file=sys.stderr)
        return 1

    try:
        source = load_corpus(args.source_docs)
        target = load_corpus(args.target_docs)
        program = parse_program(Path(args.program).read_text(), source)
        tests = load_tests(args.tests)
        table = load_embeddings(args.embeddings) if args.embeddings else None
    except (MigrationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    config = MigrationConfig(
        mode=mode,
        top_k=args.top_k,
        max_sketch_size=args.max_sketch_size,
        use_spec_constraints=not args.no_spec_constraints,
        use_error_learning=not args.no_error_learning,
        global_timeout=args.timeout,
        enumeration_budget=args.budget,
        seed=args.seed,
        int_seed_pool=int_pool,
        classical_tfidf=args.classical_tfidf,
    )

    source_runtime = MockRuntimeAdapter()
    adapter = None
    try:
        if args.adapter:
            adapter = spawn_external(args.adapter, [target.library_id])
            target_runtime = adapter
        else:
            target_runtime = MockRuntimeAdapter()
        try:
            output_text, report = synthesize(
                program, source, target, tests, config, source_runtime, target_runtime, table
            )
        except MigrationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    finally:
        if adapter is not None:
            adapter.close()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "output_program.txt").write_text(output_text)
    report_emit(report, config, out_dir / "report.json")

    full = report.migrated_lines == report.total_lines
    print(
        f"migrated {report.migrated_lines}/{report.total_lines} lines, "
        f"{report.candidates_tested} candidates tested, "
        f"{report.wall_time_s:.2f}s"
    )
    if not full:
        print(f"failure: {report.failure}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
