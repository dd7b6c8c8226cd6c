"""Runtime value model: scalars, dense tensors, and column tables.

Values travel through test files, the execution backends, and the adapter
wire protocol in one explicit JSON notation, so every backend sees the
same data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union

import numpy as np

from .errors import SchemaError

FLOAT_TOL = 1e-6


@dataclass
class Tensor:
    data: np.ndarray  # float64, any rank

    def __init__(self, data) -> None:
        self.data = np.asarray(data, dtype=np.float64)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.data.shape)

    def __repr__(self) -> str:
        return f"Tensor(shape={self.shape})"


@dataclass
class Table:
    columns: dict[str, list]  # ordered, equal-length columns

    def __post_init__(self) -> None:
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) > 1:
            raise SchemaError(f"table columns have unequal lengths: {sorted(lengths)}")

    @property
    def nrows(self) -> int:
        if not self.columns:
            return 0
        return len(next(iter(self.columns.values())))


Scalar = Union[int, float, bool, str]
Value = Union[Scalar, Tensor, Table]


def value_to_json(value: Value) -> dict[str, Any]:
    if isinstance(value, Tensor):
        return {
            "kind": "tensor",
            "shape": list(value.shape),
            "data": [float(x) for x in value.data.reshape(-1)],
        }
    if isinstance(value, Table):
        return {"kind": "table", "columns": {k: list(v) for k, v in value.columns.items()}}
    if isinstance(value, (bool, int, float, str)):
        return {"kind": "scalar", "value": value}
    raise SchemaError(f"unsupported value type: {type(value).__name__}")


def value_from_json(obj: Any) -> Value:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError(f"not a value literal: {obj!r}")
    kind = obj["kind"]
    if kind == "tensor":
        shape = tuple(int(s) for s in obj["shape"])
        data = np.asarray(obj["data"], dtype=np.float64)
        expected = int(np.prod(shape)) if shape else 1
        if data.size != expected:
            raise SchemaError(
                f"tensor payload has {data.size} elements, shape {shape} needs {expected}"
            )
        return Tensor(data.reshape(shape))
    if kind == "table":
        return Table({str(k): list(v) for k, v in obj["columns"].items()})
    if kind == "scalar":
        v = obj["value"]
        if not isinstance(v, (bool, int, float, str)):
            raise SchemaError(f"unsupported scalar payload: {v!r}")
        return v
    raise SchemaError(f"unknown value kind: {kind!r}")


def _scalar_equal(a: Scalar, b: Scalar) -> bool:
    if isinstance(a, bool) or isinstance(b, bool):
        return isinstance(a, bool) and isinstance(b, bool) and a == b
    if isinstance(a, str) or isinstance(b, str):
        return a == b
    if isinstance(a, float) or isinstance(b, float):
        return abs(float(a) - float(b)) <= FLOAT_TOL
    return a == b


def values_equal(a: Value, b: Value, tol: float = FLOAT_TOL) -> bool:
    """Elementwise float comparison at absolute tolerance; exact otherwise."""
    if isinstance(a, Tensor) and isinstance(b, Tensor):
        if a.shape != b.shape:
            return False
        return bool(np.all(np.abs(a.data - b.data) <= tol))
    if isinstance(a, Table) and isinstance(b, Table):
        if list(a.columns) != list(b.columns):
            return False
        for name in a.columns:
            ca, cb = a.columns[name], b.columns[name]
            if len(ca) != len(cb):
                return False
            for x, y in zip(ca, cb):
                if not _scalar_equal(x, y):
                    return False
        return True
    if isinstance(a, (Tensor, Table)) or isinstance(b, (Tensor, Table)):
        return False
    return _scalar_equal(a, b)


def value_shape(value: Value) -> tuple[int, ...] | None:
    """Shape symbols exposed to relation constraints; None for scalars."""
    if isinstance(value, Tensor):
        return value.shape
    if isinstance(value, Table):
        return (value.nrows,)
    return None
