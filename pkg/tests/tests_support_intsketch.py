"""Shared helper: build a bare sketch with one int hole per domain."""

from dataclasses import replace

from apimigrate.corpus import ApiEntry, ParamSpec
from apimigrate.program import CallSite
from apimigrate.sketching import generate_sketches, hole_domains


def int_sketch(domains: list[list[int]]):
    entry = ApiEntry(
        "t.Op",
        "d",
        tuple(ParamSpec(f"p{i}", "int", True) for i in range(len(domains))),
    )
    sk = next(iter(generate_sketches(entry, 1, [])))
    call = CallSite(line_index=0, callee="s.Op", binds="h")
    populated = hole_domains(sk, call, entry)
    holes = tuple(
        replace(h, domain=tuple(domains[i])) for i, h in enumerate(populated.holes)
    )
    return replace(populated, holes=holes, feasible=True)
