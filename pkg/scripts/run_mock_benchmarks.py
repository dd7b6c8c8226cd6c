#!/usr/bin/env python3
"""Run the mock benchmark suite and print a per-benchmark results table.

Ablation switches mirror the CLI: --mode, --no-spec-constraints,
--no-error-learning.  Useful for eyeballing how each engine component
contributes to search effort.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from apimigrate.corpus import load_corpus
from apimigrate.matching import load_embeddings
from apimigrate.orchestrator import MigrationConfig, synthesize
from apimigrate.program import load_tests, parse_program
from apimigrate.runtime import MockRuntimeAdapter


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--benchmarks", default="benchmarks")
    parser.add_argument("--mode", choices=["tfidf", "tfidf-embedding"], default="tfidf")
    parser.add_argument("--no-spec-constraints", action="store_true")
    parser.add_argument("--no-error-learning", action="store_true")
    parser.add_argument("--budget", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--only", help="run a single benchmark directory by name")
    args = parser.parse_args()

    root = Path(args.benchmarks)
    source = load_corpus(root / "source_docs.json")
    target = load_corpus(root / "target_docs.json")
    table = (
        load_embeddings(root / "embeddings.txt") if args.mode == "tfidf-embedding" else None
    )
    config = MigrationConfig(
        mode=args.mode.replace("-", "_"),
        use_spec_constraints=not args.no_spec_constraints,
        use_error_learning=not args.no_error_learning,
        enumeration_budget=args.budget,
        seed=args.seed,
    )

    bench_dirs = sorted(d for d in root.iterdir() if d.is_dir())
    if args.only:
        bench_dirs = [d for d in bench_dirs if d.name == args.only]
    migrated = 0
    total_time = 0.0
    print(f"{'benchmark':24s} {'lines':>5s} {'ok':>3s} {'tested':>8s} {'time':>7s}")
    for bench in bench_dirs:
        program = parse_program((bench / "program.src").read_text(), source)
        tests = load_tests(bench / "tests.json")
        started = time.time()
        _out, report = synthesize(
            program, source, target, tests, config,
            MockRuntimeAdapter(), MockRuntimeAdapter(), table,
        )
        elapsed = time.time() - started
        total_time += elapsed
        ok = report.migrated_lines == report.total_lines and report.output_verified
        migrated += ok
        print(
                f"{bench.name:24s} {report.total_lines:5d} {'yes' if ok else 'NO':>3s} "
                f"{report.candidates_tested:8d} {elapsed:6.2f}s"
        )
        if not ok and report.failure:
            print(f"    failure: {report.failure}")
    print(f"\n{migrated}/{len(bench_dirs)} migrated, total {total_time:.1f}s")
    return 0 if migrated == len(bench_dirs) else 2


if __name__ == "__main__":
    raise SystemExit(main())
