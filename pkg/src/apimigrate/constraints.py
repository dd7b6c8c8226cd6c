"""Finite-domain constraint engine over sketch holes.

Semantics: Boolean combinations of linear integer comparisons with floor
division, holes restricted to their finite domains, one value per hole.
Enumeration is depth-first over holes in id order and domain values in
listed order, so the satisfying stream is deterministic and any prefix
of it is reproducible.

Relation environments map every hole to an integer: int holes by value,
bool holes as 0/1, and string/enum/float holes by domain index (so
learned exclusions apply uniformly).  Shape symbols (``in_i``/``out_i``)
are folded in as constants from line-test observations; a constraint
whose symbols cannot all be bound never holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .corpus import ApiEntry
from .program import format_call, format_literal
from .relations import RelationExpr
from .sketching import Sketch


@dataclass(frozen=True)
class Constraint:
    expr: RelationExpr
    provenance: str  # typing | spec | relation | learned
    bindings: dict = field(default_factory=dict, compare=False)

    def variables(self) -> frozenset[str]:
        return self.expr.variables() - frozenset(self.bindings)


@dataclass(frozen=True)
class ConstraintSet:
    typing: dict  # hole id -> type tag (values drawn from domains only)
    exclusive: bool = True  # each hole takes exactly one value
    constraints: tuple[Constraint, ...] = ()

    def with_constraint(self, c: Constraint) -> "ConstraintSet":
        return replace(self, constraints=self.constraints + (c,))


Assignment = dict[int, object]  # hole id -> literal


def _env_value(hole, value) -> int:
    if hole.type_tag == "int":
        return int(value)
    if hole.type_tag == "bool":
        return 1 if value else 0
    # string/enum/float holes participate by domain index
    return hole.domain.index(value)


def compile_spec_constraints(
    entry: ApiEntry, sketch: Sketch, shape_envs: list[dict[str, int]] | None = None
) -> ConstraintSet:
    """Typing + exclusivity plus the entry's documented relations.

    Each relation is instantiated once per observed line test, with that
    test's input/output shape components bound as constants.
    """
    typing = {h.id: h.type_tag for h in sketch.holes}
    constraints: list[Constraint] = []
    for rel in entry.relationship_constraints:
        shape_vars = rel.variables() & frozenset(
            v for v in rel.variables() if v.startswith(("in_", "out_"))
        )
        if not shape_vars:
            constraints.append(Constraint(expr=rel, provenance="spec"))
            continue
        for env in shape_envs or [{}]:
            bindings = {v: env[v] for v in shape_vars if v in env}
            # Missing symbols stay unbound; the constraint then never
            # holds, which skips shapes the relation cannot describe.
            constraints.append(Constraint(expr=rel, provenance="relation", bindings=bindings))
    return ConstraintSet(typing=typing, constraints=tuple(constraints))


def add_learned(cs: ConstraintSet, expr: RelationExpr, bindings: dict | None = None) -> ConstraintSet:
    return cs.with_constraint(Constraint(expr=expr, provenance="learned", bindings=bindings or {}))


class Search:
    """Backtracking enumeration; constraints may be added mid-stream.

    Each constraint is evaluated as soon as its last hole variable binds
    (pruning), and every constraint is re-verified at emission so a
    constraint added mid-stream still excludes all later assignments that
    violate it.  Added constraints only remove not-yet-emitted
    assignments, so the stream stays a deterministic filter of the
    unconstrained product.
    """

    def __init__(self, sketch: Sketch, cs: ConstraintSet, budget: int):
        if budget < 1:
            raise ValueError("budget must be positive")
        self.sketch = sketch
        self.cs = cs
        self.budget = budget
        self.emitted = 0
        self._holes = sorted(sketch.holes, key=lambda h: h.id)
        self._var_depth = {h.var_name: i for i, h in enumerate(self._holes)}
        self._depth_memo: dict[int, int] = {}

    def add_constraint(self, expr: RelationExpr, bindings: dict | None = None) -> None:
        self.cs = add_learned(self.cs, expr, bindings)

    def _check_depth(self, c: Constraint) -> int:
        """1 + depth of the constraint's deepest hole variable (0 if none)."""
        key = id(c)
        depth = self._depth_memo.get(key)
        if depth is None:
            hole_vars = [v for v in c.variables() if v in self._var_depth]
            depth = max((self._var_depth[v] + 1 for v in hole_vars), default=0)
            self._depth_memo[key] = depth
        return depth

    def _satisfied(self, c: Constraint, env: dict[str, int]) -> bool:
        return c.expr.holds({**c.bindings, **env}) if c.bindings else c.expr.holds(env)

    def __iter__(self):
        n = len(self._holes)
        env: dict[str, int] = {}
        chosen: list = [None] * n

        def node(depth: int):
            if self.emitted >= self.budget:
                return
            if depth == n:
                if all(self._satisfied(c, env) for c in self.cs.constraints):
                    self.emitted += 1
                    yield {h.id: chosen[i] for i, h in enumerate(self._holes)}
                return
            hole = self._holes[depth]
            for value in hole.domain:
                env[hole.var_name] = _env_value(hole, value)
                chosen[depth] = value
                ok = True
                for c in self.cs.constraints:
                    if self._check_depth(c) == depth + 1 and not self._satisfied(c, env):
                        ok = False
                        break
                if ok:
                    yield from node(depth + 1)
                if self.emitted >= self.budget:
                    break
            env.pop(hole.var_name, None)

        if n == 0:
            if all(self._satisfied(c, {}) for c in self.cs.constraints):
                self.emitted += 1
                yield {}
            return
        yield from node(0)


def enumerate_assignments(sketch: Sketch, cs: ConstraintSet, budget: int):
    """All satisfying assignments, lexicographic by (hole id, domain index)."""
    yield from Search(sketch, cs, budget)


@dataclass(frozen=True)
class ConcreteCall:
    callee: str
    positional: tuple
    keyword: tuple  # ordered (name, value) pairs

    def render(self) -> str:
        return format_call(self.callee, self.positional, dict(self.keyword))


@dataclass(frozen=True)
class ParamBinding:
    call_index: int
    callee: str
    param_name: str
    position: int  # 1-based among the call's parameters
    hole_ids: tuple[int, ...]
    var_names: tuple[str, ...]
    value: object  # literal, or tuple for pairs/splats
    is_reshaping: bool


@dataclass(frozen=True)
class CandidateProgram:
    sketch: Sketch
    assignment: tuple  # sorted (hole id, value) pairs
    calls: tuple[ConcreteCall, ...]
    bindings: tuple[ParamBinding, ...]

    @property
    def text(self) -> str:
        return "\n".join(c.render() for c in self.calls)

    def assignment_dict(self) -> Assignment:
        return dict(self.assignment)


def realize(sketch: Sketch, assignment: Assignment) -> CandidateProgram:
    """Substitute hole values into the sketch; printing is deterministic."""
    calls: list[ConcreteCall] = []
    bindings: list[ParamBinding] = []
    for call_index, tpl in enumerate(sketch.chain):
        positional: list = []
        keyword: list = []
        for slot in tpl.slots:
            values = tuple(assignment[h] for h in slot.hole_ids)
            if slot.type_tag == "int_pair":
                value: object = values
            elif slot.type_tag == "int_splat":
                value = values
            else:
                value = values[0]
            if slot.type_tag == "int_splat":
                positional.extend(values)
            elif slot.keyword:
                keyword.append((slot.param_name, value))
            else:
                positional.append(value)
            bindings.append(
                ParamBinding(
                    call_index=call_index,
                    callee=tpl.callee,
                    param_name=slot.param_name,
                    position=slot.position,
                    hole_ids=slot.hole_ids,
                    var_names=tuple(sketch.hole(h).var_name for h in slot.hole_ids),
                    value=value,
                    is_reshaping=tpl.kind == "reshape",
                )
            )
        calls.append(ConcreteCall(tpl.callee, tuple(positional), tuple(keyword)))
    return CandidateProgram(
        sketch=sketch,
        assignment=tuple(sorted(assignment.items())),
        calls=tuple(calls),
        bindings=tuple(bindings),
    )


def format_literal_for_text(value) -> str:
    return format_literal(value)
