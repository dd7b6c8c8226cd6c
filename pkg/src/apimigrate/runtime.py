"""Execution backends: in-process mock runtime and subprocess adapter client.

Wire protocol (newline-delimited JSON over the child's stdin/stdout):

    -> {"op": "hello", "libraries": ["stratus"]}
    <- {"ok": true, "version": "1"}
    -> {"id": 1, "op": "eval", "code": "...", "inputs": {"x": {...}}}
    <- {"id": 1, "status": "ok", "value": {...}}
    <- {"id": 1, "status": "error", "message": "..."}

Field names are normative; Values use the explicit JSON notation from
:mod:`apimigrate.values`.
"""

from __future__ import annotations

import hashlib
import json
import queue
import re
import shlex
import subprocess
import threading
from dataclasses import dataclass

from . import mocklib
from .errors import AdapterError
from .program import SourceProgram, TestCase, VarRef, _LINE_RE, _split_args, parse_literal
from .values import Value, value_from_json, value_to_json, values_equal

PROTOCOL_VERSION = "1"
DEFAULT_EVAL_TIMEOUT = 10.0


@dataclass
class EvalResult:
    status: str  # pass | value_mismatch | error
    observed: Value | None = None
    message: str | None = None


def _chain_from_text(code: str) -> list[tuple[str, tuple, dict]]:
    """Parse candidate text into (callee, positional, keyword) stages.

    Accepts bare calls and `var = call(...)` lines; leading variable
    arguments are dropped (the pipeline input is implicit).
    """
    chain: list[tuple[str, tuple, dict]] = []
    for raw in code.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#") or re.match(r"^inputs\s*:", stripped):
            continue
        m = _LINE_RE.match(stripped)
        if m is not None:
            callee, argtext = m.group(2), m.group(3)
        else:
            m2 = re.match(r"^([A-Za-z_][A-Za-z0-9_.]*)\s*\((.*)\)\s*$", stripped)
            if m2 is None:
                raise AdapterError(f"cannot parse candidate line: {stripped!r}")
            callee, argtext = m2.group(1), m2.group(2)
        positional: list = []
        keyword: dict = {}
        for part in _split_args(argtext):
            if "=" in part and re.match(r"^[A-Za-z_][A-Za-z0-9_]*\s*=", part):
                key, _, rhs = part.partition("=")
                keyword[key.strip()] = parse_literal(rhs)
            else:
                positional.append(parse_literal(part))
        positional = [p for p in positional if not isinstance(p, VarRef)]
        keyword = {k: v for k, v in keyword.items() if not isinstance(v, VarRef)}
        chain.append((callee, tuple(positional), keyword))
    return chain


def _single_input(inputs: dict[str, Value]) -> Value:
    if len(inputs) == 1:
        return next(iter(inputs.values()))
    if "x" in inputs:
        return inputs["x"]
    raise AdapterError(f"cannot pick pipeline input from {sorted(inputs)}")


class MockRuntimeAdapter:
    """Deterministic in-process backend hosting both mock libraries."""

    backend_id = "mock"
    supports_source_lib = True
    supports_target_lib = True

    def run_code(self, code: str, inputs: dict[str, Value]) -> tuple[str, Value | str]:
        value = _single_input(inputs)
        try:
            for callee, positional, keyword in _chain_from_text(code):
                value = mocklib.run_op(callee, positional, keyword, value)
        except mocklib.MockExecutionError as exc:
            return "error", str(exc)
        return "ok", value

    def run_prefixes(self, program: SourceProgram, inputs: dict[str, Value]) -> list[Value]:
        """Execute the program, returning the value after each line."""
        value = _single_input(inputs)
        outputs: list[Value] = []
        for line in program.lines:
            positional = tuple(a for a in line.positional_args if not isinstance(a, VarRef))
            keyword = {k: v for k, v in line.keyword_args.items() if not isinstance(v, VarRef)}
            value = mocklib.run_op(line.callee, positional, keyword, value)
            outputs.append(value)
        return outputs

    def close(self) -> None:
        pass


class ExternalAdapter:
    """Client side of the wire protocol over a child process."""

    backend_id = "external"
    supports_source_lib = False
    supports_target_lib = True

    def __init__(self, proc: subprocess.Popen, libraries: list[str], timeout: float):
        self._proc = proc
        self._timeout = timeout
        self._next_id = 0
        self._lines: queue.Queue[str | None] = queue.Queue()
        self._reader = threading.Thread(target=self._pump, daemon=True)
        self._reader.start()
        self._handshake(libraries)

    def _pump(self) -> None:
        assert self._proc.stdout is not None
        for line in self._proc.stdout:
            self._lines.put(line)
        self._lines.put(None)

    def _send(self, obj: dict) -> None:
        assert self._proc.stdin is not None
        try:
            self._proc.stdin.write(json.dumps(obj) + "\n")
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise AdapterError(f"adapter process is gone: {exc}") from None

    def _recv(self, timeout: float) -> dict:
        try:
            line = self._lines.get(timeout=timeout)
        except queue.Empty:
            raise TimeoutError from None
        if line is None:
            raise AdapterError("adapter closed its stdout")
        try:
            return json.loads(line)
        except json.JSONDecodeError as exc:
            raise AdapterError(f"bad adapter response {line!r}: {exc}") from None

    def _handshake(self, libraries: list[str]) -> None:
        self._send({"op": "hello", "libraries": libraries})
        try:
            resp = self._recv(timeout=self._timeout)
        except TimeoutError:
            self.close()
            raise AdapterError("adapter handshake timed out") from None
        if resp.get("ok") is not True:
            self.close()
            raise AdapterError(f"adapter refused handshake: {resp}")
        self.version = resp.get("version", "?")

    def run_code(self, code: str, inputs: dict[str, Value]) -> tuple[str, Value | str]:
        self._next_id += 1
        rid = self._next_id
        self._send(
            {
                "id": rid,
                "op": "eval",
                "code": code,
                "inputs": {k: value_to_json(v) for k, v in inputs.items()},
            }
        )
        try:
            while True:
                resp = self._recv(timeout=self._timeout)
                if resp.get("id") == rid:
                    break
        except TimeoutError:
            return "error", f"candidate evaluation timed out after {self._timeout} seconds"
        if resp.get("status") == "ok":
            return "ok", value_from_json(resp["value"])
        if resp.get("status") == "error":
            return "error", str(resp.get("message", ""))
        raise AdapterError(f"malformed adapter response: {resp}")

    def close(self) -> None:
        try:
            if self._proc.stdin:
                self._proc.stdin.close()
            self._proc.terminate()
            self._proc.wait(timeout=5)
        except Exception:
            self._proc.kill()


def spawn_external(command: str, libraries: list[str] | None = None,
                   timeout: float = DEFAULT_EVAL_TIMEOUT) -> ExternalAdapter:
    """Start the adapter child and complete the handshake."""
    argv = shlex.split(command)
    try:
        proc = subprocess.Popen(
            argv,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            stderr=subprocess.DEVNULL,
            text=True,
        )
    except OSError as exc:
        raise AdapterError(f"cannot start adapter {command!r}: {exc}") from None
    return ExternalAdapter(proc, libraries or [mocklib.TARGET_LIBRARY], timeout)


class EvalCache:
    """(program text, test id) -> EvalResult; safe for concurrent use."""

    def __init__(self) -> None:
        self._data: dict[tuple[str, str], EvalResult] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: tuple[str, str]) -> EvalResult | None:
        with self._lock:
            result = self._data.get(key)
            if result is not None:
                self.hits += 1
            return result

    def put(self, key: tuple[str, str], result: EvalResult) -> None:
        with self._lock:
            self.misses += 1
            self._data[key] = result


def test_fingerprint(test: TestCase) -> str:
    doc = {
        "inputs": {k: value_to_json(v) for k, v in sorted(test.inputs.items())},
        "expected": value_to_json(test.expected_output),
        "scope": test.line_scope,
    }
    return hashlib.sha1(json.dumps(doc, sort_keys=True).encode()).hexdigest()


def evaluate(adapter, code: str, test: TestCase, cache: EvalCache | None = None) -> EvalResult:
    """Run a concrete call chain on the test's inputs and judge the output."""
    key = (code, test_fingerprint(test))
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    status, payload = adapter.run_code(code, test.inputs)
    if status == "error":
        result = EvalResult(status="error", message=str(payload))
    elif values_equal(payload, test.expected_output):
        result = EvalResult(status="pass", observed=payload)
    else:
        result = EvalResult(status="value_mismatch", observed=payload)
    if cache is not None:
        cache.put(key, result)
    return result
