"""Normalized documentation corpus: one JSON document per library.

File schema (field names are normative):

    {
      "library": "<id>",
      "language": "<id>",
      "entries": [
        {
          "name": "pkg.Callable",
          "description": "prose",
          "params": [
            {"name": "stride", "type": "int", "required": false,
             "default": 1, "description": "..."}
          ],
          "relations": ["out_0 == (in_0 + 2*padding - kernel) / stride + 1"]
        }
      ]
    }

``type`` is one of int, float, bool, string, int_pair, enum; enum params
carry a non-empty ``values`` list.  Relations use the infix grammar from
:mod:`apimigrate.relations`, over parameter variables (``p`` for scalars,
``p_0``/``p_1`` for pairs) and the shape symbols ``in_i``/``out_i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import SchemaError, ValidationError
from .relations import SHAPE_SYMBOLS, RelationExpr, parse_relation

TYPE_TAGS = ("int", "float", "bool", "string", "int_pair", "enum")

# Engine-wide literal seeds folded into every entry's candidate pool.
DEFAULT_INT_POOL = (-1, 0, 1, 2, 3)


@dataclass(frozen=True)
class ParamSpec:
    name: str
    type_tag: str
    required: bool
    default: object = None
    description: str = ""
    enum_values: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.type_tag not in TYPE_TAGS:
            raise ValidationError(f"param {self.name!r}: unknown type {self.type_tag!r}")
        if self.required and self.default is not None:
            raise ValidationError(f"param {self.name!r}: required params cannot carry a default")
        if self.type_tag == "enum" and not self.enum_values:
            raise ValidationError(f"param {self.name!r}: enum without values")

    def constraint_variables(self) -> tuple[str, ...]:
        """Names this param contributes to the relation variable space."""
        if self.type_tag == "int_pair":
            return (f"{self.name}_0", f"{self.name}_1")
        return (self.name,)


@dataclass(frozen=True)
class ApiEntry:
    qualified_name: str
    description: str
    params: tuple[ParamSpec, ...]
    relationship_constraints: tuple[RelationExpr, ...] = ()

    def __post_init__(self) -> None:
        names = [p.name for p in self.params]
        if len(set(names)) != len(names):
            raise ValidationError(f"{self.qualified_name}: duplicate param names")
        known = set(SHAPE_SYMBOLS)
        for p in self.params:
            known.update(p.constraint_variables())
        for rel in self.relationship_constraints:
            unknown = rel.variables() - known
            if unknown:
                raise ValidationError(
                    f"{self.qualified_name}: relation {rel.text!r} references "
                    f"unknown symbols {sorted(unknown)}"
                )

    def param(self, name: str) -> ParamSpec:
        for p in self.params:
            if p.name == name:
                return p
        raise KeyError(name)


@dataclass(frozen=True)
class DocCorpus:
    library_id: str
    language_id: str
    entries: tuple[ApiEntry, ...]
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValidationError(f"corpus {self.library_id!r} has no entries")
        for e in self.entries:
            if e.qualified_name in self._index:
                raise ValidationError(f"duplicate entry {e.qualified_name!r}")
            self._index[e.qualified_name] = e

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def lookup(self, name: str) -> ApiEntry:
        return self._index[name]


def _param_from_json(obj: dict, where: str) -> ParamSpec:
    try:
        name = obj["name"]
        type_tag = obj["type"]
        required = obj["required"]
    except KeyError as exc:
        raise SchemaError(f"{where}: param missing field {exc}") from None
    if not isinstance(required, bool):
        raise SchemaError(f"{where}: param {name!r} 'required' must be boolean")
    default = obj.get("default")
    if isinstance(default, list):
        default = tuple(default)
    return ParamSpec(
        name=name,
        type_tag=type_tag,
        required=required,
        default=default,
        description=obj.get("description", ""),
        enum_values=tuple(obj.get("values", ())),
    )


def _entry_from_json(obj: dict, index: int) -> ApiEntry:
    where = f"entries[{index}]"
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: not an object")
    for key in ("name", "description", "params"):
        if key not in obj:
            raise SchemaError(f"{where}: missing field {key!r}")
    params = tuple(
        _param_from_json(p, f"{where}.params[{j}]") for j, p in enumerate(obj["params"])
    )
    relations = tuple(parse_relation(t) for t in obj.get("relations", ()))
    return ApiEntry(
        qualified_name=obj["name"],
        description=obj["description"],
        params=params,
        relationship_constraints=relations,
    )


def corpus_from_json(doc: dict) -> DocCorpus:
    for key in ("library", "language", "entries"):
        if key not in doc:
            raise SchemaError(f"corpus document missing field {key!r}")
    entries = tuple(_entry_from_json(e, i) for i, e in enumerate(doc["entries"]))
    return DocCorpus(library_id=doc["library"], language_id=doc["language"], entries=entries)


def corpus_to_json(corpus: DocCorpus) -> dict:
    entries = []
    for e in corpus.entries:
        params = []
        for p in e.params:
            obj: dict = {
                "name": p.name,
                "type": p.type_tag,
                "required": p.required,
                "description": p.description,
            }
            if p.default is not None:
                obj["default"] = list(p.default) if isinstance(p.default, tuple) else p.default
            if p.enum_values:
                obj["values"] = list(p.enum_values)
            params.append(obj)
        entry: dict = {
            "name": e.qualified_name,
            "description": e.description,
            "params": params,
        }
        if e.relationship_constraints:
            entry["relations"] = [r.text for r in e.relationship_constraints]
        entries.append(entry)
    return {
        "library": corpus.library_id,
        "language": corpus.language_id,
        "entries": entries,
    }


def load_corpus(path: str | Path) -> DocCorpus:
    """Load and validate one library's documentation file."""
    raw = Path(path).read_text()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from None
    return corpus_from_json(doc)


def save_corpus(corpus: DocCorpus, path: str | Path) -> None:
    Path(path).write_text(json.dumps(corpus_to_json(corpus), indent=2) + "\n")


def default_value_pool(
    entry: ApiEntry, int_seed_pool: tuple[int, ...] = DEFAULT_INT_POOL
) -> dict[str, list]:
    """Candidate literal pool per type tag: documented defaults + seeds.

    Booleans are always the full two-value domain; enums contribute their
    declared values in declaration order.  Numeric pools are sorted
    ascending so the content is order-independent in the entry.
    """
    ints: set[int] = set(int(s) for s in int_seed_pool)
    floats: set[float] = set()
    strings: list[str] = []
    enums: list[str] = []
    for p in entry.params:
        if p.type_tag == "enum":
            enums.extend(v for v in p.enum_values if v not in enums)
            continue
        if p.default is None:
            continue
        if p.type_tag == "int":
            ints.add(int(p.default))
        elif p.type_tag == "float":
            floats.add(float(p.default))
        elif p.type_tag == "string":
            if p.default not in strings:
                strings.append(p.default)
        elif p.type_tag == "int_pair":
            ints.update(int(c) for c in p.default)
    return {
        "int": sorted(ints),
        "float": sorted(floats),
        "bool": [False, True],
        "string": strings,
        "enum": enums,
    }
