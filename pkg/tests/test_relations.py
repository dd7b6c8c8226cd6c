import pytest
from hypothesis import given
from hypothesis import strategies as st

from apimigrate.errors import ValidationError
from apimigrate.relations import RelationEvalError, parse_relation


def test_shape_relation_fig_style():
    # out = floor((in + 2*padding - kernel) / stride) + 1
    rel = parse_relation("out_0 == (in_0 + 2*padding - kernel) / stride + 1")
    env = {"out_0": 3, "in_0": 7, "padding": 0, "kernel": 3, "stride": 2}
    assert rel.holds(env)
    assert not rel.holds({**env, "stride": 1})


def test_floor_division():
    rel = parse_relation("a / b == 2")
    assert rel.holds({"a": 5, "b": 2})
    assert rel.holds({"a": -5, "b": -2})
    # floor semantics: -5 // 2 == -3
    assert parse_relation("a / b == -3").holds({"a": -5, "b": 2})


def test_precedence_and_bool_ops():
    rel = parse_relation("a + 2 * b == 7 and (a < b or b != 0)")
    assert rel.holds({"a": 1, "b": 3})
    assert not rel.holds({"a": 7, "b": 0})


def test_unary_minus():
    assert parse_relation("a != -1").holds({"a": 0})
    assert not parse_relation("a != -1").holds({"a": -1})
    assert parse_relation("-a == 4").holds({"a": -4})


def test_unbound_variable_and_zero_division_dont_hold():
    assert not parse_relation("mystery > 0").holds({})
    assert not parse_relation("a / b == 1").holds({"a": 3, "b": 0})
    with pytest.raises(RelationEvalError):
        parse_relation("a / b == 1").evaluate({"a": 3, "b": 0})


def test_variables_collected():
    rel = parse_relation("out_0 == (in_0 + 2*padding_0 - kernel_0) / stride_0 + 1")
    assert rel.variables() == {"out_0", "in_0", "padding_0", "kernel_0", "stride_0"}


def test_syntax_errors():
    for bad in ["a +", "== 3", "a ** b", "(a > 1", "a > 1)"]:
        with pytest.raises(ValidationError):
            parse_relation(bad)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-10, 10).filter(lambda v: v != 0))
def test_eval_matches_python_semantics(a, b, c):
    rel = parse_relation("(a + b * 2 - 1) / c")
    assert rel.evaluate({"a": a, "b": b, "c": c}) == (a + b * 2 - 1) // c
