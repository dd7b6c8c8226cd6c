#!/usr/bin/env python3
"""Regenerate the checked-in mock benchmark suite under benchmarks/.

Writes the two corpus documents, a synonym-aware embedding file, and ten
programs with seeded whole-program tests.  Everything is deterministic
for a given --seed, so reruns are byte-stable.
"""

from __future__ import annotations

import argparse
import zlib
from pathlib import Path

import numpy as np

from apimigrate import mocklib
from apimigrate.corpus import save_corpus
from apimigrate.matching import tokenize_and_stem
from apimigrate.program import TestCase, parse_program, save_tests
from apimigrate.runtime import MockRuntimeAdapter
from apimigrate.values import Table, Tensor

# stems that share one embedding direction (the synonym clusters the
# tfidf-only matcher cannot see)
SYNONYM_CLUSTERS = [
    ("arrang", "sort"),
    ("record", "row"),
    ("kei", "column"),
    ("revers", "direct"),
]

BENCHMARKS: list[tuple[str, str, str]] = [
    (
        "01_scale_shift_relu",
        "vector6",
        "inputs: x\n"
        "h1 = nimbus.Scale(factor=2.5)\n"
        "h2 = nimbus.Shift(offset=1.0)\n"
        "h3 = nimbus.Clamp(min_value=0.0)\n",
    ),
    (
        "02_affine_stack",
        "vector5",
        "inputs: x\n"
        "h1 = nimbus.Affine(units=6)\n"
        "h2 = nimbus.Clamp(min_value=0.0)\n"
        "h3 = nimbus.Affine(units=4)\n",
    ),
    (
        "03_window_pipeline",
        "vector8",
        "inputs: x\n"
        "h1 = nimbus.Pad(amount=2, fill=0.0)\n"
        "h2 = nimbus.WindowSum(width=3, stride=1)\n"
        "h3 = nimbus.Scale(factor=0.5)\n"
        "h4 = nimbus.Shift(offset=-1.0)\n",
    ),
    (
        "04_grid_features",
        "matrix7x9",
        "inputs: x\n"
        "h1 = nimbus.GridSum(kernel=3, stride=2)\n"
        "h2 = nimbus.Flatten()\n"
        "h3 = nimbus.Affine(units=5)\n"
        "h4 = nimbus.Clamp(min_value=0.0)\n",
    ),
    (
        "05_double_grid",
        "matrix6x7",
        "inputs: x\n"
        "h1 = nimbus.GridSum(kernel=2, stride=1)\n"
        "h2 = nimbus.Clamp(min_value=0.0)\n"
        "h3 = nimbus.GridSum(kernel=2, stride=2)\n"
        "h4 = nimbus.Flatten()\n"
        "h5 = nimbus.Scale(factor=2.0)\n",
    ),
    (
        "06_transpose_mix",
        "matrix5x8",
        "inputs: x\n"
        "h1 = nimbus.Transpose()\n"
        "h2 = nimbus.GridSum(kernel=2, stride=1)\n"
        "h3 = nimbus.Flatten()\n"
        "h4 = nimbus.Shift(offset=0.5)\n",
    ),
    (
        "07_signal_chain",
        "vector5",
        "inputs: x\n"
        "h1 = nimbus.Repeat(times=2)\n"
        "h2 = nimbus.Pad(amount=1, fill=0.0)\n"
        "h3 = nimbus.WindowSum(width=2, stride=1)\n"
        "h4 = nimbus.Scale(factor=1.5)\n"
        "h5 = nimbus.Shift(offset=2.0)\n"
        "h6 = nimbus.Clamp(min_value=1.0)\n",
    ),
    (
        "08_table_report",
        "table6",
        "inputs: x\n"
        "h1 = nimbus.Filter(column=\"score\", threshold=0.5)\n"
        "h2 = nimbus.Arrange(column=\"score\", descending=true)\n"
        "h3 = nimbus.Head(count=2)\n",
    ),
    (
        "09_crop_slice",
        "vector12",
        "inputs: x\n"
        "h1 = nimbus.Crop(start=1, length=8)\n"
        "h2 = nimbus.Scale(factor=3.0)\n"
        "h3 = nimbus.Pad(amount=2, fill=1.0)\n"
        "h4 = nimbus.WindowSum(width=4, stride=2)\n"
        "h5 = nimbus.Shift(offset=-0.5)\n",
    ),
    (
        "10_deep_mlp",
        "vector6",
        "inputs: x\n"
        "h1 = nimbus.Affine(units=6)\n"
        "h2 = nimbus.Clamp(min_value=0.0)\n"
        "h3 = nimbus.Affine(units=5)\n"
        "h4 = nimbus.Clamp(min_value=0.0)\n"
        "h5 = nimbus.Affine(units=4)\n"
        "h6 = nimbus.Clamp(min_value=0.0)\n"
        "h7 = nimbus.Affine(units=3)\n"
        "h8 = nimbus.Shift(offset=0.1)\n",
    ),
]


def make_input(kind: str, rng: np.random.Generator):
    if kind.startswith("vector"):
        n = int(kind[len("vector"):])
        return Tensor(np.round(rng.uniform(-3, 3, size=n), 3))
    if kind.startswith("matrix"):
        h, w = (int(v) for v in kind[len("matrix"):].split("x"))
        return Tensor(np.round(rng.uniform(-3, 3, size=(h, w)), 3))
    if kind.startswith("table"):
        n = int(kind[len("table"):])
        scores = [round(float(s), 3) for s in rng.uniform(0.0, 1.0, size=n)]
        counts = [int(c) for c in rng.integers(1, 50, size=n)]
        labels = [f"item{i}" for i in range(n)]
        return Table({"score": scores, "label": labels, "count": counts})
    raise ValueError(kind)


def build_embeddings(out_path: Path) -> None:
    """One-hot concept vectors per stemmed token; synonyms share a concept."""
    src, tgt = mocklib.build_source_corpus(), mocklib.build_target_corpus()
    stems: list[str] = []
    for corpus in (src, tgt):
        for entry in corpus.entries:
            for tok in tokenize_and_stem(entry.description):
                if tok not in stems:
                    stems.append(tok)
    concept_of: dict[str, int] = {}
    next_concept = 0
    cluster_map = {}
    for cluster in SYNONYM_CLUSTERS:
        for tok in cluster:
            cluster_map[tok] = cluster[0]
    for tok in stems:
        head = cluster_map.get(tok, tok)
        if head not in concept_of:
            concept_of[head] = next_concept
            next_concept += 1
    dim = next_concept
    lines = []
    for tok in stems:
        vec = ["0"] * dim
        vec[concept_of[cluster_map.get(tok, tok)]] = "1"
        lines.append(tok + " " + " ".join(vec))
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {out_path} ({len(stems)} tokens, dim {dim})")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="benchmarks")
    parser.add_argument("--tests-per-benchmark", type=int, default=2)
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    src, tgt = mocklib.build_source_corpus(), mocklib.build_target_corpus()
    save_corpus(src, out / "source_docs.json")
    save_corpus(tgt, out / "target_docs.json")
    build_embeddings(out / "embeddings.txt")

    runtime = MockRuntimeAdapter()
    for name, input_kind, text in BENCHMARKS:
        rng = np.random.default_rng([args.seed, zlib.crc32(name.encode())])
        bench_dir = out / name
        bench_dir.mkdir(exist_ok=True)
        (bench_dir / "program.src").write_text(text)
        program = parse_program(text, src)
        tests = []
        for _ in range(args.tests_per_benchmark):
            value = make_input(input_kind, rng)
            outputs = runtime.run_prefixes(program, {"x": value})
            tests.append(TestCase(inputs={"x": value}, expected_output=outputs[-1]))
        save_tests(tests, bench_dir / "tests.json")
        print(f"wrote {bench_dir} ({len(program.lines)} lines)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
