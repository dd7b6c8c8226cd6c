import sys
import textwrap

import numpy as np
import pytest

from apimigrate.errmsg import classify, match_all
from apimigrate.errors import AdapterError
from apimigrate.program import TestCase
from apimigrate.runtime import (
    EvalCache,
    MockRuntimeAdapter,
    evaluate,
    spawn_external,
)
from apimigrate.values import Table, Tensor, values_equal


def test_mock_scale_passes():
    adapter = MockRuntimeAdapter()
    test = TestCase(
        inputs={"x": Tensor([1.0, 2.0, 3.0])}, expected_output=Tensor([2.0, 4.0, 6.0])
    )
    result = evaluate(adapter, "stratus.Amplify(2.0)", test)
    assert result.status == "pass"
    assert values_equal(result.observed, test.expected_output)


def test_mock_value_mismatch():
    adapter = MockRuntimeAdapter()
    test = TestCase(inputs={"x": Tensor([1.0])}, expected_output=Tensor([2.0]))
    result = evaluate(adapter, "stratus.Amplify(3.0)", test)
    assert result.status == "value_mismatch"


def test_mock_negative_parameter_error_is_classifiable():
    adapter = MockRuntimeAdapter()
    test = TestCase(inputs={"x": Tensor([1.0, 2.0])}, expected_output=Tensor([1.0]))
    result = evaluate(adapter, "stratus.Extend(-3, 1, fill=0.0)", test)
    assert result.status == "error"
    assert "-3" in result.message
    got = classify(result.message)
    assert got is not None and got.pattern.type_id == 1


def test_mock_deterministic():
    adapter = MockRuntimeAdapter()
    test = TestCase(inputs={"x": Tensor([1.0, -2.0])}, expected_output=Tensor([0.0]))
    a = evaluate(adapter, "stratus.RollingTotal(-1)", test)
    b = evaluate(adapter, "stratus.RollingTotal(-1)", test)
    assert a == b


def test_cache_hit_returns_same_result():
    adapter = MockRuntimeAdapter()
    cache = EvalCache()
    test = TestCase(inputs={"x": Tensor([1.0, 2.0])}, expected_output=Tensor([2.0, 4.0]))
    first = evaluate(adapter, "stratus.Amplify(2.0)", test, cache)
    again = evaluate(adapter, "stratus.Amplify(2.0)", test, cache)
    assert first == again
    assert cache.hits == 1 and cache.misses == 1


def test_chain_execution_matches_manual_composition():
    adapter = MockRuntimeAdapter()
    x = Tensor(np.arange(12, dtype=float).reshape(3, 4))
    status, value = adapter.run_code(
        "stratus.Permute(1, 0)\nstratus.Ravel()\nstratus.Bias(1.0)", {"x": x}
    )
    assert status == "ok"
    assert values_equal(value, Tensor(x.data.T.reshape(-1) + 1.0))


def test_inputs_directive_and_bindings_accepted():
    adapter = MockRuntimeAdapter()
    status, value = adapter.run_code(
        "inputs: x\nh1 = stratus.Amplify(2.0)\nh2 = stratus.Bias(1.0)",
        {"x": Tensor([1.0])},
    )
    assert status == "ok"
    assert values_equal(value, Tensor([3.0]))


# --- mock error catalog stays classifiable ------------------------------------

ERROR_CASES = [
    # (code, input, expected hyponym type)
    ("stratus.Extend(-3, 1)", Tensor([1.0, 2.0]), 1),
    ("stratus.Slice(-1, 2)", Tensor([1.0, 2.0]), 1),
    ("stratus.Top(-2)", Table({"a": [1, 2]}), 1),
    ("stratus.Permute(-1, 0)", Tensor(np.ones((2, 2))), 1),
    ("stratus.Permute(3, 0)", Tensor(np.ones((2, 2))), 1),
    ("stratus.PlaneSum((3, 3), stride=(2, 2), padding=(-1, 0))", Tensor(np.ones((5, 5))), 1),
    ("stratus.Linear(-4)", Tensor([1.0, 2.0]), 1),
    ("stratus.RollingTotal(9)", Tensor([1.0, 2.0]), 2),
    ("stratus.Slice(1, 9)", Tensor([1.0, 2.0]), 2),
    ("stratus.PlaneSum((9, 9))", Tensor(np.ones((4, 4))), 2),
    ("stratus.RollingTotal(2)", Tensor(np.ones((2, 2))), 3),
    ("stratus.Permute(1, 0)", Tensor([1.0, 2.0]), 3),
    ("stratus.KeepAbove(\"a\", 0.5)", Tensor([1.0]), 3),
    ("stratus.PlaneSum((2, 2))", Tensor([1.0, 2.0]), 3),
    ("stratus.Linear(3)", Tensor(np.ones((2, 2))), 3),
    ("stratus.RollingTotal(2, step=0)", Tensor([1.0, 2.0, 3.0]), 4),
    ("stratus.RollingTotal(0)", Tensor([1.0, 2.0]), 4),
    ("stratus.Tile(0)", Tensor([1.0]), 4),
    ("stratus.Linear(0)", Tensor([1.0, 2.0]), 4),
    ("stratus.PlaneSum((2, 2), stride=(0, 1))", Tensor(np.ones((4, 4))), 4),
]


@pytest.mark.parametrize("code,value,expected_type", ERROR_CASES)
def test_mock_errors_match_exactly_one_pattern(code, value, expected_type):
    adapter = MockRuntimeAdapter()
    status, message = adapter.run_code(code, {"x": value})
    assert status == "error"
    assert match_all(message) == [expected_type], message


# --- external adapter protocol --------------------------------------------------

INLINE_ADAPTER = textwrap.dedent(
    """
    import json, sys
    sys.path.insert(0, {src!r})
    from apimigrate.runtime import MockRuntimeAdapter
    from apimigrate.values import value_from_json, value_to_json
    backend = MockRuntimeAdapter()
    for line in sys.stdin:
        req = json.loads(line)
        if req.get("op") == "hello":
            print(json.dumps({{"ok": True, "version": "inline"}}), flush=True)
            continue
        inputs = {{k: value_from_json(v) for k, v in req["inputs"].items()}}
        status, payload = backend.run_code(req["code"], inputs)
        if status == "ok":
            resp = {{"id": req["id"], "status": "ok", "value": value_to_json(payload)}}
        else:
            resp = {{"id": req["id"], "status": "error", "message": payload}}
        print(json.dumps(resp), flush=True)
    """
)


@pytest.fixture()
def inline_adapter(tmp_path):
    import apimigrate

    src = str(next(iter(apimigrate.__path__)) + "/..")
    script_path = tmp_path / "inline_adapter.py"
    script_path.write_text(INLINE_ADAPTER.format(src=src))
    adapter = spawn_external(f"{sys.executable} -u {script_path}", ["stratus"], timeout=10.0)
    yield adapter
    adapter.close()


def test_external_handshake_and_eval(inline_adapter):
    test = TestCase(inputs={"x": Tensor([1.0, 2.0])}, expected_output=Tensor([2.0, 4.0]))
    result = evaluate(inline_adapter, "stratus.Amplify(2.0)", test)
    assert result.status == "pass"


def test_external_matches_mock_backend(inline_adapter):
    mock = MockRuntimeAdapter()
    cases = [
        ("stratus.Bias(0.5)", Tensor([1.0, -1.0])),
        ("stratus.Permute(1, 0)", Tensor(np.arange(6, dtype=float).reshape(2, 3))),
        ("stratus.RollingTotal(-1)", Tensor([1.0, 2.0])),
        ("stratus.SortValues(\"a\", ascending=false)", Table({"a": [2.0, 1.0, 3.0]})),
    ]
    for code, value in cases:
        s1, p1 = mock.run_code(code, {"x": value})
        s2, p2 = inline_adapter.run_code(code, {"x": value})
        assert s1 == ("ok" if s2 == "ok" else s1) and s2 == s1
        if s1 == "ok":
            assert values_equal(p1, p2)
        else:
            assert p1 == p2


def test_spawn_missing_command_fails():
    with pytest.raises(AdapterError):
        spawn_external("/nonexistent/adapter-binary", ["stratus"])


def test_handshake_timeout():
    with pytest.raises(AdapterError, match="handshake"):
        spawn_external(f"{sys.executable} -c 'import time; time.sleep(30)'", ["stratus"], timeout=0.5)
