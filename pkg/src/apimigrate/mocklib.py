"""Desk-scale mock library pair: ``nimbus`` (source) and ``stratus`` (target).

Every source op has at least one semantically equivalent target chain;
``nimbus.GridSum`` is the designed one-to-many case (its counterpart
``stratus.PlaneSum`` consumes the transposed layout, so an axis
permutation must precede it).  Descriptions are authored so some pairs
share vocabulary and some do not: ``nimbus.Arrange`` has zero stemmed
token overlap with its counterpart ``stratus.SortValues``, while
``nimbus.Flatten``/``stratus.Ravel`` are word-for-word identical.

Every runtime error message matches exactly one of the four diagnostic
templates the error-understanding model knows, so learned pruning is
exercisable end to end.
"""

from __future__ import annotations

import numpy as np

from .corpus import ApiEntry, DocCorpus, ParamSpec
from .relations import parse_relation
from .sketching import ReshapingOp
from .values import Table, Tensor, Value

SOURCE_LIBRARY = "nimbus"
TARGET_LIBRARY = "stratus"


class MockExecutionError(Exception):
    """Raised by mock ops; the message is the interpreter diagnostic."""


# --- diagnostic message builders (one per template shape) -----------------

def err_negative_dim(value: int, dims: list[int]) -> str:
    return f"Trying to create tensor with negative dimension {value}: {list(dims)}"


def err_bad_axis(kind: str, axes: list[int]) -> str:
    # kind is "negative" or "invalid"; names only the offending value so
    # fault localization cannot implicate the valid axis
    bad = next(a for a in axes if a < 0) if kind == "negative" else next(a for a in axes if a > 1)
    return f"Trying to permute tensor with {kind} axis: [{bad}]"


def err_position(op: str, param: str, pos: int, expected: str, got) -> str:
    return f"{op}(): argument {param} (position {pos}) must be {expected}, not {got}"


def err_rank(want_rank: int, what: str, want_shape: list[int], got_shape: tuple[int, ...]) -> str:
    return (
        f"Expected {want_rank}-dimensional input for {want_rank}-dimensional "
        f"{what} {list(want_shape)}, but got {len(got_shape)}-dimensional input "
        f"of size {list(got_shape)} instead"
    )


def err_unsupported(subject: str) -> str:
    return f"{subject} is not supported"


def _as_tensor(v: Value, rank: int, what: str, want_shape: list[int]) -> np.ndarray:
    if isinstance(v, Tensor):
        if len(v.shape) == rank:
            return v.data
        raise MockExecutionError(err_rank(rank, what, want_shape, v.shape))
    # scalars and tables report as 0-dimensional
    raise MockExecutionError(err_rank(rank, what, want_shape, ()))


def _as_table(v: Value, op: str, param: str, got) -> Table:
    if isinstance(v, Table):
        return v
    got_shape = v.shape if isinstance(v, Tensor) else ()
    raise MockExecutionError(err_rank(1, "row table", [1], got_shape))


def _column(table: Table, op: str, param: str, pos: int, name: str) -> list:
    if name not in table.columns:
        raise MockExecutionError(err_position(op, param, pos, "an existing column", name))
    return table.columns[name]


# --- shared numeric kernels ------------------------------------------------

def _affine_weights(n: int, units: int) -> np.ndarray:
    i = np.arange(n).reshape(-1, 1)
    j = np.arange(units).reshape(1, -1)
    return ((i + 2 * j) % 5 - 2).astype(np.float64)


def _window_sum_1d(x: np.ndarray, width: int, stride: int, op: str, wname: str, sname: str):
    if width < 0:
        raise MockExecutionError(err_negative_dim(width, [width]))
    if width == 0:
        raise MockExecutionError(err_unsupported(f"empty {wname}"))
    if stride <= 0:
        raise MockExecutionError(err_unsupported(f"non-positive {sname}"))
    n = x.shape[0]
    if width > n:
        raise MockExecutionError(err_position(op, wname, 1, "a valid extent", width))
    count = (n - width) // stride + 1
    return np.asarray([x[i * stride : i * stride + width].sum() for i in range(count)])


def _window_sum_2d(
    x: np.ndarray,
    kernel: tuple[int, int],
    stride: tuple[int, int],
    padding: tuple[int, int],
    op: str,
) -> np.ndarray:
    for k in kernel:
        if k < 0:
            raise MockExecutionError(err_negative_dim(k, list(kernel)))
        if k == 0:
            raise MockExecutionError(err_unsupported("empty kernel"))
    for s in stride:
        if s <= 0:
            raise MockExecutionError(err_unsupported("non-positive stride"))
    h, w = x.shape
    ph, pw = padding
    padded_shape = (h + 2 * ph, w + 2 * pw)
    if ph < 0 or pw < 0:
        bad = ph if ph < 0 else pw
        raise MockExecutionError(err_negative_dim(bad, list(padded_shape)))
    if kernel[0] > padded_shape[0] or kernel[1] > padded_shape[1]:
        bad = kernel[0] if kernel[0] > padded_shape[0] else kernel[1]
        raise MockExecutionError(err_position(op, "kernel", 1, "a valid extent", bad))
    padded = np.pad(x, ((ph, ph), (pw, pw)))
    out_h = (padded_shape[0] - kernel[0]) // stride[0] + 1
    out_w = (padded_shape[1] - kernel[1]) // stride[1] + 1
    out = np.zeros((out_h, out_w))
    for a in range(out_h):
        for b in range(out_w):
            ia, ib = a * stride[0], b * stride[1]
            out[a, b] = padded[ia : ia + kernel[0], ib : ib + kernel[1]].sum()
    return out


# --- op implementations -----------------------------------------------------
# Each op: fn(args, value) -> Value; args hold canonical literals
# (int pairs as tuples).


def _op_scale(args, v):
    x = _as_tensor_any(v, "constant gain")
    return Tensor(x * float(args["factor"]))


def _as_tensor_any(v: Value, what: str) -> np.ndarray:
    if isinstance(v, Tensor):
        return v.data
    raise MockExecutionError(err_rank(1, what, [1], ()))


def _op_shift(args, v):
    return Tensor(_as_tensor_any(v, "constant offset") + float(args["offset"]))


def _op_window_sum(args, v):
    x = _as_tensor(v, 1, "windowed summation", [int(args["width"])])
    return Tensor(_window_sum_1d(x, int(args["width"]), int(args["stride"]), "window_sum", "width", "stride"))


def _op_affine(args, v):
    units = int(args["units"])
    if units < 0:
        raise MockExecutionError(err_negative_dim(units, [units]))
    if units == 0:
        raise MockExecutionError(err_unsupported("empty layout"))
    x = _as_tensor(v, 1, "affine map", [units])
    return Tensor(x @ _affine_weights(x.shape[0], units))


def _op_clamp(args, v):
    return Tensor(np.maximum(_as_tensor_any(v, "activation floor"), float(args["min_value"])))


def _op_transpose(args, v):
    x = _as_tensor(v, 2, "axis swap", [2, 2])
    return Tensor(x.T)


def _op_flatten(args, v):
    return Tensor(_as_tensor_any(v, "flat layout").reshape(-1))


def _op_pad(args, v):
    amount = int(args["amount"])
    x = _as_tensor(v, 1, "padding extension", [amount])
    if amount < 0:
        raise MockExecutionError(err_negative_dim(amount, [x.shape[0] + 2 * amount]))
    return Tensor(np.pad(x, amount, constant_values=float(args["fill"])))


def _op_crop(args, v):
    start, length = int(args["start"]), int(args["length"])
    x = _as_tensor(v, 1, "cropped segment", [length])
    if start < 0:
        raise MockExecutionError(err_negative_dim(start, [start]))
    if length < 0:
        raise MockExecutionError(err_negative_dim(length, [length]))
    if start + length > x.shape[0]:
        raise MockExecutionError(err_position("crop", "length", 2, "a valid extent", length))
    return Tensor(x[start : start + length])


def _op_repeat(args, v):
    times = int(args["times"])
    x = _as_tensor(v, 1, "tiled layout", [times])
    if times <= 0:
        raise MockExecutionError(err_unsupported("non-positive count"))
    return Tensor(np.tile(x, times))


def _op_filter(args, v):
    t = _as_table(v, "filter", "column", args["column"])
    col = _column(t, "filter", "column", 1, str(args["column"]))
    thr = float(args["threshold"])
    keep = [i for i, c in enumerate(col) if float(c) > thr]
    return Table({k: [vals[i] for i in keep] for k, vals in t.columns.items()})


def _sort_indices(col: list, descending: bool) -> list[int]:
    return sorted(range(len(col)), key=lambda i: col[i], reverse=descending)


def _op_arrange(args, v):
    t = _as_table(v, "arrange", "column", args["column"])
    col = _column(t, "arrange", "column", 1, str(args["column"]))
    idx = _sort_indices(col, bool(args["descending"]))
    return Table({k: [vals[i] for i in idx] for k, vals in t.columns.items()})


def _op_head(args, v):
    count = int(args["count"])
    t = _as_table(v, "head", "count", count)
    if count < 0:
        raise MockExecutionError(err_negative_dim(count, [count]))
    return Table({k: vals[:count] for k, vals in t.columns.items()})


def _op_grid_sum(args, v):
    kernel, stride = int(args["kernel"]), int(args["stride"])
    x = _as_tensor(v, 2, "summation window", [kernel, kernel])
    return Tensor(_window_sum_2d(x, (kernel, kernel), (stride, stride), (0, 0), "grid_sum"))


def _op_amplify(args, v):
    return Tensor(_as_tensor_any(v, "constant gain") * float(args["gain"]))


def _op_bias(args, v):
    return Tensor(_as_tensor_any(v, "constant bias") + float(args["delta"]))


def _op_rolling_total(args, v):
    x = _as_tensor(v, 1, "rolling window", [int(args["window"])])
    return Tensor(
        _window_sum_1d(x, int(args["window"]), int(args["step"]), "rolling_total", "window", "step")
    )


def _op_linear(args, v):
    units = int(args["units"])
    if units < 0:
        raise MockExecutionError(err_negative_dim(units, [units]))
    if units == 0:
        raise MockExecutionError(err_unsupported("empty layout"))
    x = _as_tensor(v, 1, "linear map", [units])
    return Tensor(x @ _affine_weights(x.shape[0], units))


def _op_rectify(args, v):
    return Tensor(np.maximum(_as_tensor_any(v, "activation floor"), float(args["floor_value"])))


def _op_permute(args, v):
    axes = [int(args["axis0"]), int(args["axis1"])]
    x = _as_tensor(v, 2, "axis permutation", [2, 2])
    if any(a < 0 for a in axes):
        raise MockExecutionError(err_bad_axis("negative", axes))
    if any(a > 1 for a in axes):
        raise MockExecutionError(err_bad_axis("invalid", axes))
    if axes == [1, 0]:
        return Tensor(x.T)
    # repeated or identity axes resolve to the identity, deterministically
    return Tensor(x.copy())


def _op_ravel(args, v):
    return Tensor(_as_tensor_any(v, "flat layout").reshape(-1))


def _op_extend(args, v):
    before, after = int(args["before"]), int(args["after"])
    x = _as_tensor(v, 1, "padding extension", [before, after])
    if before < 0 or after < 0:
        bad = before if before < 0 else after
        raise MockExecutionError(err_negative_dim(bad, [x.shape[0] + before + after]))
    return Tensor(np.pad(x, (before, after), constant_values=float(args["fill"])))


def _op_slice(args, v):
    begin, size = int(args["begin"]), int(args["size"])
    x = _as_tensor(v, 1, "sliced segment", [size])
    if begin < 0:
        raise MockExecutionError(err_negative_dim(begin, [begin]))
    if size < 0:
        raise MockExecutionError(err_negative_dim(size, [size]))
    if begin + size > x.shape[0]:
        raise MockExecutionError(err_position("slice", "size", 2, "a valid extent", size))
    return Tensor(x[begin : begin + size])


def _op_tile(args, v):
    count = int(args["count"])
    x = _as_tensor(v, 1, "tiled layout", [count])
    if count <= 0:
        raise MockExecutionError(err_unsupported("non-positive count"))
    return Tensor(np.tile(x, count))


def _op_keep_above(args, v):
    t = _as_table(v, "keep_above", "field", args["field"])
    col = _column(t, "keep_above", "field", 1, str(args["field"]))
    cutoff = float(args["cutoff"])
    keep = [i for i, c in enumerate(col) if float(c) > cutoff]
    return Table({k: [vals[i] for i in keep] for k, vals in t.columns.items()})


def _op_sort_values(args, v):
    t = _as_table(v, "sort_values", "by", args["by"])
    col = _column(t, "sort_values", "by", 1, str(args["by"]))
    idx = _sort_indices(col, not bool(args["ascending"]))
    return Table({k: [vals[i] for i in idx] for k, vals in t.columns.items()})


def _op_top(args, v):
    limit = int(args["limit"])
    t = _as_table(v, "top", "limit", limit)
    if limit < 0:
        raise MockExecutionError(err_negative_dim(limit, [limit]))
    return Table({k: vals[:limit] for k, vals in t.columns.items()})


def _op_cast(args, v):
    return Tensor(np.trunc(_as_tensor_any(v, "integer cast")))


def _op_plane_sum(args, v):
    kernel = tuple(int(c) for c in args["kernel"])
    stride = tuple(int(c) for c in args["stride"])
    padding = tuple(int(c) for c in args["padding"])
    x = _as_tensor(v, 2, "summation window", list(kernel))
    # consumes the transposed layout: window sums run over x.T
    return Tensor(_window_sum_2d(x.T, kernel, stride, padding, "plane_sum"))


# --- signatures & registry ---------------------------------------------------

class OpSig:
    def __init__(self, fn, params: list[tuple[str, object]]):
        self.fn = fn
        self.params = params  # (name, default) with default=None meaning required

    def bind(self, positional: tuple, keyword: dict, op_name: str) -> dict:
        args: dict = {}
        names = [n for n, _ in self.params]
        extras = list(positional)
        if len(extras) > len(names):
            raise MockExecutionError(
                err_position(op_name, names[-1] if names else "arg", len(names) or 1,
                             "a declared argument", extras[len(names)])
            )
        for i, val in enumerate(extras):
            args[names[i]] = val
        for key, val in keyword.items():
            if key not in names:
                raise MockExecutionError(
                    err_position(op_name, key, len(names) or 1, "a declared argument", val)
                )
            args[key] = val
        for pos, (name, default) in enumerate(self.params, start=1):
            if name in args:
                continue
            if default is None:
                raise MockExecutionError(
                    err_position(op_name, name, pos, "a provided argument", "missing")
                )
            args[name] = default
        return args


REQUIRED = None

SOURCE_OPS: dict[str, OpSig] = {
    "nimbus.Scale": OpSig(_op_scale, [("factor", REQUIRED)]),
    "nimbus.Shift": OpSig(_op_shift, [("offset", REQUIRED)]),
    "nimbus.WindowSum": OpSig(_op_window_sum, [("width", REQUIRED), ("stride", 1)]),
    "nimbus.Affine": OpSig(_op_affine, [("units", REQUIRED)]),
    "nimbus.Clamp": OpSig(_op_clamp, [("min_value", 0.0)]),
    "nimbus.Transpose": OpSig(_op_transpose, []),
    "nimbus.Flatten": OpSig(_op_flatten, []),
    "nimbus.Pad": OpSig(_op_pad, [("amount", REQUIRED), ("fill", 0.0)]),
    "nimbus.Crop": OpSig(_op_crop, [("start", REQUIRED), ("length", REQUIRED)]),
    "nimbus.Repeat": OpSig(_op_repeat, [("times", REQUIRED)]),
    "nimbus.Filter": OpSig(_op_filter, [("column", REQUIRED), ("threshold", REQUIRED)]),
    "nimbus.Arrange": OpSig(_op_arrange, [("column", REQUIRED), ("descending", False)]),
    "nimbus.Head": OpSig(_op_head, [("count", REQUIRED)]),
    "nimbus.GridSum": OpSig(_op_grid_sum, [("kernel", REQUIRED), ("stride", 1)]),
}

TARGET_OPS: dict[str, OpSig] = {
    "stratus.Amplify": OpSig(_op_amplify, [("gain", REQUIRED)]),
    "stratus.Bias": OpSig(_op_bias, [("delta", REQUIRED)]),
    "stratus.RollingTotal": OpSig(_op_rolling_total, [("window", REQUIRED), ("step", 1)]),
    "stratus.Linear": OpSig(_op_linear, [("units", REQUIRED)]),
    "stratus.Rectify": OpSig(_op_rectify, [("floor_value", 0.0)]),
    "stratus.Permute": OpSig(_op_permute, [("axis0", REQUIRED), ("axis1", REQUIRED)]),
    "stratus.Ravel": OpSig(_op_ravel, []),
    "stratus.Extend": OpSig(_op_extend, [("before", REQUIRED), ("after", REQUIRED), ("fill", 0.0)]),
    "stratus.Slice": OpSig(_op_slice, [("begin", REQUIRED), ("size", REQUIRED)]),
    "stratus.Tile": OpSig(_op_tile, [("count", REQUIRED)]),
    "stratus.KeepAbove": OpSig(_op_keep_above, [("field", REQUIRED), ("cutoff", REQUIRED)]),
    "stratus.SortValues": OpSig(_op_sort_values, [("by", REQUIRED), ("ascending", True)]),
    "stratus.Top": OpSig(_op_top, [("limit", REQUIRED)]),
    "stratus.Cast": OpSig(_op_cast, []),
    "stratus.PlaneSum": OpSig(
        _op_plane_sum, [("kernel", REQUIRED), ("stride", (1, 1)), ("padding", (0, 0))]
    ),
}

ALL_OPS = {**SOURCE_OPS, **TARGET_OPS}

RESHAPING_VOCAB = [
    ReshapingOp(name="permute", arity=2, semantics="stratus.Permute"),
    ReshapingOp(name="cast", arity=0, semantics="stratus.Cast"),
    ReshapingOp(name="flatten", arity=0, semantics="stratus.Ravel"),
]


def run_op(callee: str, positional: tuple, keyword: dict, value: Value) -> Value:
    sig = ALL_OPS.get(callee)
    if sig is None:
        raise MockExecutionError(
            err_position(callee.split(".")[-1].lower(), "callee", 1, "a known callable", callee)
        )
    op_name = callee.split(".")[-1]
    snake = "".join("_" + c.lower() if c.isupper() else c for c in op_name).lstrip("_")
    args = sig.bind(positional, keyword, snake)
    return sig.fn(args, value)


# --- documentation corpora ----------------------------------------------------

def _p(name, type_tag, required, default=None, description="", values=()):
    return ParamSpec(
        name=name,
        type_tag=type_tag,
        required=required,
        default=default,
        description=description,
        enum_values=tuple(values),
    )


def build_source_corpus() -> DocCorpus:
    entries = (
        ApiEntry(
            "nimbus.Scale",
            "Multiply every element of the input tensor by a constant scaling factor.",
            (_p("factor", "float", True, description="multiplier applied to each element"),),
        ),
        ApiEntry(
            "nimbus.Shift",
            "Add a constant offset to every element of the input tensor.",
            (_p("offset", "float", True, description="amount added to each element"),),
        ),
        ApiEntry(
            "nimbus.WindowSum",
            "Slide a summation window across the input signal producing windowed totals.",
            (
                _p("width", "int", True, description="window width in elements"),
                _p("stride", "int", False, default=1, description="window step"),
            ),
        ),
        ApiEntry(
            "nimbus.Affine",
            "Apply a fully connected affine transformation producing the given number of output units.",
            (_p("units", "int", True, description="output feature count"),),
        ),
        ApiEntry(
            "nimbus.Clamp",
            "Clamp elements below the threshold up to the threshold, a rectified activation.",
            (_p("min_value", "float", False, default=0.0, description="lower bound"),),
        ),
        ApiEntry(
            "nimbus.Transpose",
            "Swap the two axes of a matrix.",
            (),
        ),
        ApiEntry(
            "nimbus.Flatten",
            "Collapse the input into a single flat vector in row major order.",
            (),
        ),
        ApiEntry(
            "nimbus.Pad",
            "Extend the signal with fill values on both ends.",
            (
                _p("amount", "int", True, description="elements added on each end"),
                _p("fill", "float", False, default=0.0, description="value used for new cells"),
            ),
        ),
        ApiEntry(
            "nimbus.Crop",
            "Extract a contiguous segment of the signal.",
            (
                _p("start", "int", True, description="first element kept"),
                _p("length", "int", True, description="number of elements kept"),
            ),
        ),
        ApiEntry(
            "nimbus.Repeat",
            "Tile the signal end to end the given number of times.",
            (_p("times", "int", True, description="copies laid end to end"),),
        ),
        ApiEntry(
            "nimbus.Filter",
            "Keep table rows whose column value exceeds a threshold.",
            (
                _p("column", "string", True, description="column inspected"),
                _p("threshold", "float", True, description="strict lower bound"),
            ),
        ),
        ApiEntry(
            "nimbus.Arrange",
            # zero stemmed-token overlap with its stratus counterpart
            "Arrange records from smallest to largest given some chosen key, optionally reversed.",
            (
                _p("column", "string", True, description="key used to arrange"),
                _p("descending", "bool", False, default=False, description="reverse the arrangement"),
            ),
        ),
        ApiEntry(
            "nimbus.Head",
            "Take the first rows of the table.",
            (_p("count", "int", True, description="rows kept"),),
        ),
        ApiEntry(
            "nimbus.GridSum",
            "Slide a square summation window over a two dimensional grid.",
            (
                _p("kernel", "int", True, description="window side length"),
                _p("stride", "int", False, default=1, description="window step in both axes"),
            ),
        ),
    )
    return DocCorpus(library_id=SOURCE_LIBRARY, language_id="mock", entries=entries)


def build_target_corpus() -> DocCorpus:
    entries = (
        ApiEntry(
            "stratus.Amplify",
            "Multiply each entry of the tensor by a constant gain factor.",
            (_p("gain", "float", True, description="multiplier applied to each entry"),),
        ),
        ApiEntry(
            "stratus.Bias",
            "Add a constant bias to each entry of the tensor.",
            (_p("delta", "float", True, description="amount added to each entry"),),
        ),
        ApiEntry(
            "stratus.RollingTotal",
            "Compute rolling totals with a summation window sliding over the signal.",
            (
                _p("window", "int", True, description="window width in elements"),
                _p("step", "int", False, default=1, description="window step"),
            ),
        ),
        ApiEntry(
            "stratus.Linear",
            "Fully connected linear transformation onto the chosen number of output units.",
            (_p("units", "int", True, description="output feature count"),),
        ),
        ApiEntry(
            "stratus.Rectify",
            "Rectified activation clamping entries below the floor up to the floor.",
            (_p("floor_value", "float", False, default=0.0, description="lower bound"),),
        ),
        ApiEntry(
            "stratus.Permute",
            "Reorder the axes of a tensor by the given permutation.",
            (
                _p("axis0", "int", True, description="axis placed first"),
                _p("axis1", "int", True, description="axis placed second"),
            ),
        ),
        ApiEntry(
            "stratus.Ravel",
            "Collapse the input into a single flat vector in row major order.",
            (),
        ),
        ApiEntry(
            "stratus.Extend",
            "Grow the signal with fill values before and after.",
            (
                _p("before", "int", True, description="cells prepended"),
                _p("after", "int", True, description="cells appended"),
                _p("fill", "float", False, default=0.0, description="value used for new cells"),
            ),
        ),
        ApiEntry(
            "stratus.Slice",
            "Extract a contiguous segment of the signal.",
            (
                _p("begin", "int", True, description="first element kept"),
                _p("size", "int", True, description="number of elements kept"),
            ),
        ),
        ApiEntry(
            "stratus.Tile",
            "Tile the signal end to end the given number of times.",
            (_p("count", "int", True, description="copies laid end to end"),),
        ),
        ApiEntry(
            "stratus.KeepAbove",
            "Keep table rows whose field value exceeds a cutoff.",
            (
                _p("field", "string", True, description="column inspected"),
                _p("cutoff", "float", True, description="strict lower bound"),
            ),
        ),
        ApiEntry(
            "stratus.SortValues",
            "Sort the rows of a table by one column's values in either direction.",
            (
                _p("by", "string", True, description="sort column"),
                _p("ascending", "bool", False, default=True, description="sort direction"),
            ),
        ),
        ApiEntry(
            "stratus.Top",
            "Return the leading rows of a table.",
            (_p("limit", "int", True, description="rows kept"),),
        ),
        ApiEntry(
            "stratus.Cast",
            "Cast tensor values to integers by truncation toward zero.",
            (),
        ),
        ApiEntry(
            "stratus.PlaneSum",
            "Slide a square summation window over a two dimensional plane held in column major layout.",
            (
                _p("kernel", "int_pair", True, description="window side lengths"),
                _p("stride", "int_pair", False, default=(1, 1), description="window steps"),
                _p("padding", "int_pair", False, default=(0, 0), description="zero padding per axis"),
            ),
            relationship_constraints=(
                parse_relation("out_0 == (in_0 + 2*padding_0 - kernel_0) / stride_0 + 1"),
                parse_relation("out_1 == (in_1 + 2*padding_1 - kernel_1) / stride_1 + 1"),
            ),
        ),
    )
    return DocCorpus(library_id=TARGET_LIBRARY, language_id="mock", entries=entries)
