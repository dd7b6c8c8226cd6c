"""Program sketches: one target call, optionally preceded by reshaping ops.

A sketch is a chain of call templates whose parameters are numbered holes
(``#1``, ``#2``, ...).  Target-call holes are numbered first, reshaping
holes after, in chain order.  Sketches stream in nondecreasing size, the
bare call first, then every reshaping combination in vocabulary order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .corpus import ApiEntry, ParamSpec, default_value_pool
from .program import CallSite


@dataclass(frozen=True)
class ReshapingOp:
    name: str
    arity: int  # number of integer holes
    semantics: str  # qualified callee understood by the runtime


@dataclass(frozen=True)
class Hole:
    id: int
    type_tag: str  # int, float, bool, string, enum
    var_name: str  # variable this hole exposes to relation constraints
    bound_param: str  # "<call_index>:<param>[<component>]"
    domain: tuple = ()
    enum_values: tuple[str, ...] = ()


@dataclass(frozen=True)
class Slot:
    param_name: str
    type_tag: str  # int, float, bool, string, enum, int_pair, int_splat
    hole_ids: tuple[int, ...]
    keyword: bool
    position: int  # 1-based position among the call's parameters


@dataclass(frozen=True)
class CallTemplate:
    callee: str
    kind: str  # "target" | "reshape"
    slots: tuple[Slot, ...]


@dataclass(frozen=True)
class Sketch:
    target_entry: ApiEntry
    chain: tuple[CallTemplate, ...]
    holes: tuple[Hole, ...]
    feasible: bool = True

    @property
    def size(self) -> int:
        return len(self.chain)

    def hole(self, hole_id: int) -> Hole:
        return self.holes[hole_id - 1]

    def var_to_hole(self) -> dict[str, int]:
        return {h.var_name: h.id for h in self.holes}

    def text(self) -> str:
        """Template rendering with #i placeholders, one call per line."""
        lines = []
        for tpl in self.chain:
            parts = []
            for slot in tpl.slots:
                if slot.type_tag == "int_pair":
                    body = "(" + ",".join(f"#{h}" for h in slot.hole_ids) + ")"
                elif slot.type_tag == "int_splat":
                    body = ",".join(f"#{h}" for h in slot.hole_ids)
                else:
                    body = f"#{slot.hole_ids[0]}"
                parts.append(f"{slot.param_name}={body}" if slot.keyword else body)
            lines.append(f"{tpl.callee}({','.join(parts)})")
        return "\n".join(lines)


def _target_template(entry: ApiEntry, next_id: int) -> tuple[CallTemplate, list[Hole], int]:
    slots: list[Slot] = []
    holes: list[Hole] = []
    for pos, p in enumerate(entry.params, start=1):
        if p.type_tag == "int_pair":
            ids = (next_id, next_id + 1)
            next_id += 2
            for comp, hid in enumerate(ids):
                holes.append(
                    Hole(
                        id=hid,
                        type_tag="int",
                        var_name=f"{p.name}_{comp}",
                        bound_param=f"0:{p.name}[{comp}]",
                    )
                )
        else:
            ids = (next_id,)
            next_id += 1
            holes.append(
                Hole(
                    id=ids[0],
                    type_tag=p.type_tag,
                    var_name=p.name,
                    bound_param=f"0:{p.name}",
                    enum_values=p.enum_values,
                )
            )
        slots.append(
            Slot(
                param_name=p.name,
                type_tag=p.type_tag,
                hole_ids=ids,
                keyword=not p.required,
                position=pos,
            )
        )
    return CallTemplate(entry.qualified_name, "target", tuple(slots)), holes, next_id


def _reshape_template(
    op: ReshapingOp, call_index: int, next_id: int
) -> tuple[CallTemplate, list[Hole], int]:
    ids = tuple(range(next_id, next_id + op.arity))
    holes = [
        Hole(
            id=hid,
            type_tag="int",
            var_name=f"{op.name}{call_index}_{comp}",
            bound_param=f"{call_index}:{op.name}[{comp}]",
        )
        for comp, hid in enumerate(ids)
    ]
    slot = Slot(param_name=op.name, type_tag="int_splat", hole_ids=ids, keyword=False, position=1)
    slots = (slot,) if op.arity > 0 else ()
    return CallTemplate(op.semantics, "reshape", slots), holes, next_id + op.arity


def generate_sketches(api: ApiEntry, max_size: int, reshaping_vocab: list[ReshapingOp]):
    """Yield sketches of size 1..max_size in nondecreasing size order."""
    for size in range(1, max_size + 1):
        if size == 1:
            tpl, holes, _ = _target_template(api, 1)
            yield Sketch(target_entry=api, chain=(tpl,), holes=tuple(holes))
            continue
        for combo in itertools.product(reshaping_vocab, repeat=size - 1):
            tpl, holes, next_id = _target_template(api, 1)
            chain: list[CallTemplate] = []
            all_holes = list(holes)
            for call_index, op in enumerate(combo):
                rtpl, rholes, next_id = _reshape_template(op, call_index, next_id)
                chain.append(rtpl)
                all_holes.extend(rholes)
            chain.append(tpl)
            yield Sketch(target_entry=api, chain=tuple(chain), holes=tuple(all_holes))


def hole_domains(
    sketch: Sketch,
    source_call: CallSite,
    target_entry: ApiEntry,
    int_seed_pool: tuple[int, ...] = None,
) -> Sketch:
    """Populate candidate domains: source literals first, then the pool.

    A hole with an empty domain marks the sketch infeasible (skipped by
    the enumeration loop, never fatal).
    """
    from .corpus import DEFAULT_INT_POOL

    pool = default_value_pool(
        target_entry, DEFAULT_INT_POOL if int_seed_pool is None else int_seed_pool
    )
    feasible = True
    holes = []
    for h in sketch.holes:
        if h.type_tag == "bool":
            domain: list = [False, True]
        elif h.type_tag == "enum":
            domain = list(h.enum_values)
        else:
            domain = list(source_call.literals_of_type(h.type_tag))
            for v in pool.get(h.type_tag, []):
                if v not in domain:
                    domain.append(v)
        if not domain:
            feasible = False
        holes.append(replace(h, domain=tuple(domain)))
    return replace(sketch, holes=tuple(holes), feasible=feasible)
