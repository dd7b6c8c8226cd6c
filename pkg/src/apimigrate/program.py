"""Straight-line program model and per-line test derivation.

Mini call syntax, one call per line:

    inputs: x
    h1 = nimbus.Scale(factor=2.0)
    h2 = nimbus.Shift(h1, offset=1.0)

* An optional leading ``inputs:`` directive declares the program's input
  variables; ``#`` comments and blank lines are ignored.
* Literals: ints, floats, strings (".."), booleans (true/false), and
  parenthesized int pairs ``(2, 2)``.
* A bare identifier argument must refer to an input variable or a
  variable bound on an earlier line.  Calls are pipeline stages: each
  line consumes the previous line's value (the test input for the first
  line); an explicit leading variable argument is allowed but redundant.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import DocCorpus
from .errors import ResolutionError, SchemaError, ScopeError, SourceTestFailure
from .values import Value, value_from_json, value_to_json

Literal = int | float | bool | str | tuple


@dataclass(frozen=True)
class VarRef:
    name: str


@dataclass(frozen=True)
class CallSite:
    line_index: int
    callee: str
    positional_args: tuple = ()
    keyword_args: dict = field(default_factory=dict)
    binds: str = "_"

    def int_literals(self) -> list[int]:
        """Distinct int literals in first-appearance order (pairs expanded)."""
        out: list[int] = []

        def add(v) -> None:
            if isinstance(v, bool):
                return
            if isinstance(v, int) and v not in out:
                out.append(v)
            elif isinstance(v, tuple):
                for c in v:
                    add(c)

        for v in self.positional_args:
            add(v)
        for v in self.keyword_args.values():
            add(v)
        return out

    def literals_of_type(self, type_tag: str) -> list:
        if type_tag in ("int", "int_pair"):
            return self.int_literals()
        out: list = []

        def matches(v) -> bool:
            if type_tag == "float":
                return isinstance(v, float)
            if type_tag == "bool":
                return isinstance(v, bool)
            if type_tag in ("string", "enum"):
                return isinstance(v, str)
            return False

        for v in list(self.positional_args) + list(self.keyword_args.values()):
            if matches(v) and v not in out:
                out.append(v)
        return out


@dataclass(frozen=True)
class SourceProgram:
    lines: tuple[CallSite, ...]
    input_vars: tuple[str, ...] = ()


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # domain type, not a pytest class

    inputs: dict[str, Value]
    expected_output: Value
    line_scope: int | None = None  # None = whole program


_LINE_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*([A-Za-z_][A-Za-z0-9_.]*)\s*\((.*)\)\s*$")
_INPUTS_RE = re.compile(r"^\s*inputs\s*:\s*(.*)$")


def _split_args(text: str) -> list[str]:
    """Split a call's argument text on top-level commas."""
    parts: list[str] = []
    depth = 0
    in_str = False
    cur = ""
    for ch in text:
        if in_str:
            cur += ch
            if ch == '"':
                in_str = False
            continue
        if ch == '"':
            in_str = True
            cur += ch
        elif ch == "(":
            depth += 1
            cur += ch
        elif ch == ")":
            depth -= 1
            cur += ch
        elif ch == "," and depth == 0:
            parts.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        parts.append(cur.strip())
    return parts


def parse_literal(text: str):
    """Parse one literal or variable reference of the mini syntax."""
    text = text.strip()
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return text[1:-1]
    if text in ("true", "True"):
        return True
    if text in ("false", "False"):
        return False
    if text.startswith("(") and text.endswith(")"):
        comps = [c.strip() for c in text[1:-1].split(",") if c.strip()]
        try:
            return tuple(int(c) for c in comps)
        except ValueError:
            raise SchemaError(f"tuple literal must hold ints: {text!r}") from None
    if re.fullmatch(r"-?\d+", text):
        return int(text)
    if re.fullmatch(r"-?\d*\.\d+([eE][-+]?\d+)?|-?\d+\.(\d+)?([eE][-+]?\d+)?|-?\d+[eE][-+]?\d+", text):
        return float(text)
    if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", text):
        return VarRef(text)
    raise SchemaError(f"cannot parse literal {text!r}")


def parse_program(source_text: str, corpus: DocCorpus) -> SourceProgram:
    """Parse mini-syntax text, resolving callees against the corpus."""
    input_vars: tuple[str, ...] = ()
    lines: list[CallSite] = []
    bound: set[str] = set()
    for raw_lineno, raw in enumerate(source_text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _INPUTS_RE.match(stripped)
        if m:
            if lines or input_vars:
                raise SchemaError(f"line {raw_lineno}: inputs directive must come first")
            input_vars = tuple(v.strip() for v in m.group(1).split(",") if v.strip())
            bound.update(input_vars)
            continue
        m = _LINE_RE.match(stripped)
        if m is None:
            raise SchemaError(f"line {raw_lineno}: not a call of the form var = Name(...)")
        binds, callee, argtext = m.group(1), m.group(2), m.group(3)
        if callee not in corpus:
            raise ResolutionError(
                f"line {raw_lineno}: unknown callee {callee!r} in corpus {corpus.library_id!r}"
            )
        if binds in bound:
            raise ScopeError(f"line {raw_lineno}: variable {binds!r} rebound (single assignment)")
        positional: list = []
        keyword: dict = {}
        for part in _split_args(argtext):
            if "=" in part and re.match(r"^[A-Za-z_][A-Za-z0-9_]*\s*=", part):
                key, _, rhs = part.partition("=")
                keyword[key.strip()] = _check_ref(parse_literal(rhs), bound, raw_lineno)
            else:
                if keyword:
                    raise SchemaError(
                        f"line {raw_lineno}: positional argument after keyword argument"
                    )
                positional.append(_check_ref(parse_literal(part), bound, raw_lineno))
        lines.append(
            CallSite(
                line_index=len(lines),
                callee=callee,
                positional_args=tuple(positional),
                keyword_args=keyword,
                binds=binds,
            )
        )
        bound.add(binds)
    return SourceProgram(lines=tuple(lines), input_vars=input_vars)


def _check_ref(value, bound: set[str], lineno: int):
    if isinstance(value, VarRef) and value.name not in bound:
        raise ScopeError(f"line {lineno}: variable {value.name!r} used before definition")
    return value


def format_literal(value) -> str:
    if isinstance(value, VarRef):
        return value.name
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return f'"{value}"'
    if isinstance(value, tuple):
        return "(" + ", ".join(str(int(c)) for c in value) + ")"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_call(callee: str, positional, keyword) -> str:
    parts = [format_literal(v) for v in positional]
    parts += [f"{k}={format_literal(v)}" for k, v in keyword.items()]
    return f"{callee}({', '.join(parts)})"


def print_program(program: SourceProgram) -> str:
    """Canonical text form; parse(print(p)) == p for canonical programs."""
    out: list[str] = []
    if program.input_vars:
        out.append("inputs: " + ", ".join(program.input_vars))
    for line in program.lines:
        out.append(
            f"{line.binds} = "
            + format_call(line.callee, line.positional_args, line.keyword_args)
        )
    return "\n".join(out) + ("\n" if out else "")


def load_tests(path: str | Path) -> list[TestCase]:
    doc = json.loads(Path(path).read_text())
    if "tests" not in doc:
        raise SchemaError(f"{path}: missing top-level 'tests' list")
    out: list[TestCase] = []
    for i, t in enumerate(doc["tests"]):
        try:
            inputs = {k: value_from_json(v) for k, v in t["inputs"].items()}
            expected = value_from_json(t["expected_output"])
        except KeyError as exc:
            raise SchemaError(f"{path}: tests[{i}] missing field {exc}") from None
        out.append(TestCase(inputs=inputs, expected_output=expected))
    return out


def save_tests(tests: list[TestCase], path: str | Path) -> None:
    doc = {
        "tests": [
            {
                "inputs": {k: value_to_json(v) for k, v in t.inputs.items()},
                "expected_output": value_to_json(t.expected_output),
            }
            for t in tests
        ]
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def generate_line_tests(program, tests, runtime) -> dict[int, list[TestCase]]:
    """Run each whole-program test and record every prefix's output.

    Returns, per line k, tests whose expectation is the value observed
    after executing lines 0..k on the test's inputs.  Aborts if the
    source program does not pass its own tests (the migration premise).
    """
    from .values import values_equal  # local to avoid import cycle at module load

    per_line: dict[int, list[TestCase]] = {k: [] for k in range(len(program.lines))}
    for t_index, test in enumerate(tests):
        prefix_outputs = runtime.run_prefixes(program, test.inputs)
        if len(program.lines) > 0:
            final = prefix_outputs[len(program.lines) - 1]
            if not values_equal(final, test.expected_output):
                raise SourceTestFailure(
                    f"source program fails its own test #{t_index}; not migrating"
                )
        for k in range(len(program.lines)):
            per_line[k].append(
                TestCase(
                    inputs=test.inputs,
                    expected_output=prefix_outputs[k],
                    line_scope=k,
                )
            )
    return per_line
