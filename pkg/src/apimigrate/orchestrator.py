"""Top-level synthesis loop: per-line refactoring over ranked target APIs.

For each source line, candidate target APIs are tried in ranking order;
for each API, sketches stream smallest-first; for each sketch, a
finite-domain search enumerates hole assignments under documentation
constraints.  The first realized candidate passing every line test wins.
Runtime errors feed the error-understanding model, whose confirmed
constraints prune the remaining enumeration of the current sketch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

from .constraints import (
    CandidateProgram,
    ConstraintSet,
    Search,
    compile_spec_constraints,
    realize,
)
from .corpus import DEFAULT_INT_POOL, DocCorpus
from .errmsg import ErrorReport, classify, hypothesize, probe
from .errors import MigrationError, SourceTestFailure
from .matching import EmbeddingTable, build_similarity, rank_targets
from .mocklib import RESHAPING_VOCAB
from .program import CallSite, SourceProgram, TestCase, generate_line_tests
from .runtime import EvalCache, evaluate
from .sketching import ReshapingOp, generate_sketches, hole_domains
from .values import value_shape


@dataclass(frozen=True)
class MigrationConfig:
    mode: str = "tfidf"  # tfidf | tfidf_embedding
    top_k: int = 200
    max_sketch_size: int = 2
    use_spec_constraints: bool = True
    use_error_learning: bool = True
    global_timeout: float = 3600.0
    enumeration_budget: int = 10_000
    seed: int = 0
    int_seed_pool: tuple[int, ...] = DEFAULT_INT_POOL
    classical_tfidf: bool = False
    reshaping_vocab: tuple[ReshapingOp, ...] = tuple(RESHAPING_VOCAB)

    def __post_init__(self) -> None:
        if self.top_k < 1:
            raise MigrationError("top_k must be >= 1")
        if self.global_timeout <= 0:
            raise MigrationError("global_timeout must be positive")


@dataclass
class LineOutcome:
    line_index: int
    source_callee: str
    status: str  # migrated | failed
    snippet: list[str] = field(default_factory=list)
    candidates_tested: int = 0
    assignments_enumerated: int = 0
    elapsed_s: float = 0.0
    api: str | None = None
    api_rank: int | None = None
    sketch_size: int | None = None
    reason: str | None = None


@dataclass
class MigrationReport:
    lines: list[LineOutcome] = field(default_factory=list)
    migrated_lines: int = 0
    total_lines: int = 0
    candidates_tested: int = 0
    wall_time_s: float = 0.0
    output_verified: bool = False
    failure: str | None = None


def report_to_json(report: MigrationReport, config: MigrationConfig) -> dict:
    return {
        "config": {
            "mode": config.mode,
            "top_k": config.top_k,
            "max_sketch_size": config.max_sketch_size,
            "use_spec_constraints": config.use_spec_constraints,
            "use_error_learning": config.use_error_learning,
            "global_timeout": config.global_timeout,
            "enumeration_budget": config.enumeration_budget,
            "seed": config.seed,
            "int_seed_pool": list(config.int_seed_pool),
        },
        "lines": [
            {
                "line_index": o.line_index,
                "source_callee": o.source_callee,
                "status": o.status,
                "snippet": o.snippet,
                "candidates_tested": o.candidates_tested,
                "assignments_enumerated": o.assignments_enumerated,
                "elapsed_s": round(o.elapsed_s, 6),
                "api": o.api,
                "api_rank": o.api_rank,
                "sketch_size": o.sketch_size,
                "reason": o.reason,
            }
            for o in report.lines
        ],
        "totals": {
            "lines": report.total_lines,
            "migrated": report.migrated_lines,
            "candidates_tested": report.candidates_tested,
            "wall_time_s": round(report.wall_time_s, 6),
        },
        "output_verified": report.output_verified,
        "failure": report.failure,
    }


def _shape_envs(direct_tests: list[TestCase]) -> list[dict[str, int]]:
    envs = []
    for test in direct_tests:
        env: dict[str, int] = {}
        in_shape = value_shape(next(iter(test.inputs.values())))
        out_shape = value_shape(test.expected_output)
        for i, s in enumerate(in_shape or ()):
            env[f"in_{i}"] = int(s)
        for i, s in enumerate(out_shape or ()):
            env[f"out_{i}"] = int(s)
        envs.append(env)
    return envs


def refactor_line(
    line: CallSite,
    target: DocCorpus,
    direct_tests: list[TestCase],
    ranking: list[tuple[str, float]],
    config: MigrationConfig,
    runtime,
    cache: EvalCache | None = None,
    deadline: float | None = None,
    table: EmbeddingTable | None = None,
) -> LineOutcome:
    """Search ranked APIs for a snippet passing every test of this line."""
    started = time.monotonic()
    outcome = LineOutcome(line_index=line.line_index, source_callee=line.callee, status="failed")
    cache = cache if cache is not None else EvalCache()

    def eval_candidate(candidate: CandidateProgram) -> tuple[str, str | None]:
        outcome.candidates_tested += 1
        worst: tuple[str, str | None] = ("pass", None)
        for test in direct_tests:
            result = evaluate(runtime, candidate.text, test, cache)
            if result.status == "error":
                return "error", result.message
            if result.status == "value_mismatch":
                worst = ("value_mismatch", None)
        return worst

    shape_envs = _shape_envs(direct_tests)
    for rank, (api_name, _score) in enumerate(ranking, start=1):
        entry = target.lookup(api_name)
        for sketch in generate_sketches(entry, config.max_sketch_size, list(config.reshaping_vocab)):
            populated = hole_domains(sketch, line, entry, config.int_seed_pool)
            if not populated.feasible:
                continue
            if config.use_spec_constraints:
                cs = compile_spec_constraints(entry, populated, shape_envs)
            else:
                cs = ConstraintSet(typing={h.id: h.type_tag for h in populated.holes})
            search = Search(populated, cs, config.enumeration_budget)
            for assignment in search:
                if deadline is not None and time.monotonic() > deadline:
                    outcome.assignments_enumerated += search.emitted
                    outcome.reason = "global timeout"
                    outcome.elapsed_s = time.monotonic() - started
                    return outcome
                candidate = realize(populated, assignment)
                status, message = eval_candidate(candidate)
                if status == "pass":
                    outcome.status = "migrated"
                    outcome.snippet = [call.render() for call in candidate.calls]
                    outcome.api = api_name
                    outcome.api_rank = rank
                    outcome.sketch_size = populated.size
                    outcome.assignments_enumerated += search.emitted
                    outcome.elapsed_s = time.monotonic() - started
                    return outcome
                if status == "error" and config.use_error_learning and message:
                    classification = classify(message)
                    if classification is not None:
                        report = ErrorReport(message=message, candidate=candidate)
                        for hyp in hypothesize(report, classification, candidate, table):
                            result = probe(hyp, candidate, report, eval_candidate)
                            if result.status == "confirmed" and result.constraint is not None:
                                search.add_constraint(result.constraint)
                                break
            outcome.assignments_enumerated += search.emitted
    outcome.reason = outcome.reason or (
        f"exhausted top-{min(config.top_k, len(ranking))} APIs without a passing candidate"
    )
    outcome.elapsed_s = time.monotonic() - started
    return outcome


def _snippet_program_lines(line: CallSite, snippet: list[str]) -> list[str]:
    """Assign output variables: intermediates suffixed, last keeps the name."""
    out = []
    for i, call_text in enumerate(snippet):
        var = line.binds if i == len(snippet) - 1 else f"{line.binds}__t{i}"
        out.append(f"{var} = {call_text}")
    return out


def synthesize(
    program: SourceProgram,
    source: DocCorpus,
    target: DocCorpus,
    tests: list[TestCase],
    config: MigrationConfig,
    source_runtime,
    target_runtime,
    table: EmbeddingTable | None = None,
) -> tuple[str, MigrationReport]:
    """Migrate a whole program line by line; returns (output text, report).

    The output program is the concatenation of per-line snippets in line
    order.  On a line failure the best partial migration is still
    returned, with the failure recorded in the report.
    """
    started = time.monotonic()
    deadline = started + config.global_timeout
    report = MigrationReport(total_lines=len(program.lines))
    cache = EvalCache()

    # Derive per-line tests; aborts if the source fails its own suite.
    line_tests = generate_line_tests(program, tests, source_runtime)

    matrix = build_similarity(
        source, target, config.mode, table, classical_idf=config.classical_tfidf
    )

    header = (
        ["inputs: " + ", ".join(program.input_vars)] if program.input_vars else []
    )
    output_lines: list[str] = []
    for line in program.lines:
        ranking = rank_targets(matrix, line.callee, config.top_k)
        direct_tests = []
        for t_index, test in enumerate(tests):
            if line.line_index == 0:
                direct_in = next(iter(test.inputs.values()))
            else:
                direct_in = line_tests[line.line_index - 1][t_index].expected_output
            direct_tests.append(
                TestCase(
                    inputs={"x": direct_in},
                    expected_output=line_tests[line.line_index][t_index].expected_output,
                    line_scope=line.line_index,
                )
            )
        outcome = refactor_line(
            line, target, direct_tests, ranking, config, target_runtime,
            cache=cache, deadline=deadline, table=table,
        )
        report.lines.append(outcome)
        report.candidates_tested += outcome.candidates_tested
        if outcome.status != "migrated":
            report.failure = f"line {line.line_index} ({line.callee}): {outcome.reason}"
            break
        report.migrated_lines += 1
        output_lines.extend(_snippet_program_lines(line, outcome.snippet))

    output_text = "\n".join(header + output_lines) + ("\n" if header + output_lines else "")

    if report.migrated_lines == report.total_lines:
        report.output_verified = _verify_output(output_text, tests, target_runtime)
    report.wall_time_s = time.monotonic() - started
    return output_text, report


def _verify_output(output_text: str, tests: list[TestCase], target_runtime) -> bool:
    from .values import values_equal

    for test in tests:
        status, payload = target_runtime.run_code(output_text, test.inputs)
        if status != "ok" or not values_equal(payload, test.expected_output):
            return False
    return True
