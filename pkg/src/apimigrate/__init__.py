"""Documentation-driven, test-guided API migration for straight-line programs."""

from .corpus import ApiEntry, DocCorpus, ParamSpec, default_value_pool, load_corpus
from .matching import (
    EmbeddingTable,
    SimilarityMatrix,
    build_similarity,
    cosine,
    load_embeddings,
    rank_targets,
    tokenize_and_stem,
)
from .orchestrator import MigrationConfig, MigrationReport, refactor_line, synthesize
from .program import SourceProgram, TestCase, generate_line_tests, parse_program, print_program
from .runtime import EvalResult, MockRuntimeAdapter, evaluate, spawn_external
from .values import Table, Tensor, Value, values_equal

__version__ = "0.1.0"

__all__ = [
    "ApiEntry",
    "DocCorpus",
    "EmbeddingTable",
    "EvalResult",
    "MigrationConfig",
    "MigrationReport",
    "MockRuntimeAdapter",
    "ParamSpec",
    "SimilarityMatrix",
    "SourceProgram",
    "Table",
    "Tensor",
    "TestCase",
    "Value",
    "build_similarity",
    "cosine",
    "default_value_pool",
    "evaluate",
    "generate_line_tests",
    "load_corpus",
    "load_embeddings",
    "parse_program",
    "print_program",
    "rank_targets",
    "refactor_line",
    "spawn_external",
    "synthesize",
    "tokenize_and_stem",
    "values_equal",
]
