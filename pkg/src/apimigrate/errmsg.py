"""Error message understanding: classify, localize, probe, learn.

Classification is rule-based over a small closed lexicon rather than a
statistical tagger; the four diagnostic templates are shallow enough for
strict token-adjacency matching.  Each token gets a *set* of part-of-
speech classes:

    PREP      closed list (with, of, in, for, ...)
    CC        coordinating conjunctions (but, and, ...)
    ADV       not, never
    VERB      be-forms, a small irregular list, -ing/-ed words
    PP        past participles: -ed words plus irregulars
    ADJ_FAULT fault-sense adjectives (negative, invalid, empty, ...)
    ADJ_DIM   "<n>-dimensional"
    CD        unsigned integers (signed ones are NUM, never CD)
    DET       articles/demonstratives
    NOUN      any remaining alphabetic token

Templates (matched in type order, leftmost occurrence):

    1  NOUN+ PREP ADJ_FAULT NOUN        "tensor with negative dimension"
    2  NOUN CD                          "position 1"
    3  CC VERB ADJ_DIM NOUN             "but got 4-dimensional input"
    4  VERB ADV PP                      "is not supported"

The type-1 template's optional adjective is realized as a required
fault-sense adjective: without it, any "X of Y" phrase would match and
benign messages could not be rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .constraints import CandidateProgram, ParamBinding
from .relations import RelationExpr, parse_relation

# --- tokenization & tagging -------------------------------------------------

_TOKEN_RE = re.compile(r"\d+-dimensional|[A-Za-z][A-Za-z0-9_-]*|-?\d+|[^\sA-Za-z0-9]")

_PREPS = frozenset(
    "with of in for at on by from into to without over across under".split()
)
_CCS = frozenset("but and or nor yet so".split())
_ADVS = frozenset(["not", "never"])
_BE = frozenset("is are was were be been being am".split())
_IRREGULAR_VERBS = frozenset(
    "got get gets must can cannot has have had does do did create trying try "
    "expected expect failed fail raise raised found".split()
)
_IRREGULAR_PPS = frozenset("given found known broken thrown got gotten".split())
_FAULT_ADJS = frozenset(
    "negative non-positive nonpositive invalid empty zero illegal unknown missing bad".split()
)
_DETS = frozenset("a an the this that these those".split())

_DIM_RE = re.compile(r"^\d+-dimensional$")
_CD_RE = re.compile(r"^\d+$")
_NUM_RE = re.compile(r"^-\d+$")


@dataclass(frozen=True)
class Token:
    text: str
    classes: frozenset[str]

    def has(self, cls: str) -> bool:
        return cls in self.classes


def _classes(text: str) -> frozenset[str]:
    t = text.lower()
    out: set[str] = set()
    if _CD_RE.match(t):
        out.add("CD")
    elif _NUM_RE.match(t):
        out.add("NUM")
    elif _DIM_RE.match(t):
        out.add("ADJ_DIM")
    elif t[0].isalpha():
        if t in _PREPS:
            out.add("PREP")
        if t in _CCS:
            out.add("CC")
        if t in _ADVS:
            out.add("ADV")
        if t in _DETS:
            out.add("DET")
        if t in _FAULT_ADJS:
            out.add("ADJ_FAULT")
        if t in _BE or t in _IRREGULAR_VERBS or (len(t) > 4 and t.endswith(("ing", "ed"))):
            out.add("VERB")
        if t in _IRREGULAR_PPS or (len(t) > 3 and t.endswith("ed")):
            out.add("PP")
        if not out:
            out.add("NOUN")
    else:
        out.add("PUNCT")
    return frozenset(out)


def tokenize_message(message: str) -> list[Token]:
    return [Token(text=m.group(0), classes=_classes(m.group(0))) for m in _TOKEN_RE.finditer(message)]


# --- pattern catalog ----------------------------------------------------------

@dataclass(frozen=True)
class HyponymPattern:
    type_id: int
    pos_sequence: str
    extraction_rule: str


PATTERNS = (
    HyponymPattern(1, "NOUN+ PREP ADJ_FAULT NOUN", "fault_adjective_noun"),
    HyponymPattern(2, "NOUN CD", "positional_slot"),
    HyponymPattern(3, "CC VERB ADJ_DIM NOUN", "observed_rank"),
    HyponymPattern(4, "VERB ADV PP", "unsupported_subject"),
)


@dataclass(frozen=True)
class Classification:
    pattern: HyponymPattern
    span_text: str
    start: int  # token index of the match
    tokens: tuple[Token, ...] = field(repr=False)
    message: str = field(repr=False, default="")


def _match_type(tokens: list[Token], type_id: int) -> tuple[int, int] | None:
    """Return (start, end) token span of the leftmost match, else None."""
    n = len(tokens)
    if type_id == 1:
        for i in range(1, n - 2):
            if (
                tokens[i].has("PREP")
                and tokens[i - 1].has("NOUN")
                and tokens[i + 1].has("ADJ_FAULT")
                and i + 2 < n
                and tokens[i + 2].has("NOUN")
            ):
                start = i - 1
                while start > 0 and tokens[start - 1].has("NOUN"):
                    start -= 1
                return start, i + 3
        return None
    if type_id == 2:
        for i in range(n - 1):
            if tokens[i].has("NOUN") and tokens[i + 1].has("CD"):
                return i, i + 2
        return None
    if type_id == 3:
        for i in range(n - 3):
            if (
                tokens[i].has("CC")
                and tokens[i + 1].has("VERB")
                and tokens[i + 2].has("ADJ_DIM")
                and tokens[i + 3].has("NOUN")
            ):
                return i, i + 4
        return None
    if type_id == 4:
        for i in range(n - 2):
            if tokens[i].has("VERB") and tokens[i + 1].has("ADV") and tokens[i + 2].has("PP"):
                return i, i + 3
        return None
    raise ValueError(type_id)


def match_all(message: str) -> list[int]:
    """Type ids of every template the message matches (test helper)."""
    tokens = tokenize_message(message)
    return [p.type_id for p in PATTERNS if _match_type(tokens, p.type_id) is not None]


def classify(message: str) -> Classification | None:
    """First matching template in type order; None when nothing matches."""
    tokens = tokenize_message(message)
    for pattern in PATTERNS:
        span = _match_type(tokens, pattern.type_id)
        if span is not None:
            start, end = span
            return Classification(
                pattern=pattern,
                span_text=" ".join(t.text for t in tokens[start:end]),
                start=start,
                tokens=tuple(tokens),
                message=message,
            )
    return None


# --- fault hypotheses ---------------------------------------------------------

@dataclass(frozen=True)
class ErrorReport:
    message: str
    phase: str = "execution"  # construction | execution
    candidate: CandidateProgram | None = None


@dataclass(frozen=True)
class FaultHypothesis:
    binding: ParamBinding
    suspect_value: object
    candidate_constraint: RelationExpr
    hyponym_type: int
    score: float
    mutation: dict  # hole id -> probe value
    tightened_constraint: RelationExpr | None = None
    tightened_mutation: dict | None = None


_ADDR_RE = re.compile(r"0x[0-9a-fA-F]+")
_LONG_NUM_RE = re.compile(r"\d{6,}")


def normalize_message(message: str) -> str:
    """Fold run-specific artifacts (addresses, long ids); keep small literals."""
    out = _ADDR_RE.sub("<addr>", message)
    out = _LONG_NUM_RE.sub("<id>", out)
    return " ".join(out.split())


def _trigrams(s: str) -> set[str]:
    s = f"  {s.lower()} "
    return {s[i : i + 3] for i in range(len(s) - 2)}


def name_similarity(a: str, b: str, table=None) -> float:
    """Dice coefficient over character trigrams; word vectors when loaded."""
    if table is not None:
        va, vb = table.vectors.get(a.lower()), table.vectors.get(b.lower())
        if va is not None and vb is not None:
            import numpy as np

            na, nb = float(np.linalg.norm(va)), float(np.linalg.norm(vb))
            if na > 0 and nb > 0:
                return float(va @ vb / (na * nb))
    ta, tb = _trigrams(a), _trigrams(b)
    if not ta or not tb:
        return 0.0
    return 2 * len(ta & tb) / (len(ta) + len(tb))


def _message_numbers(tokens: tuple[Token, ...]) -> list[int]:
    return [int(t.text) for t in tokens if t.has("CD") or t.has("NUM")]


def _int_components(binding: ParamBinding) -> list[tuple[int, str, int]]:
    """(component index, var name, int value) for each integer component."""
    value = binding.value
    comps = value if isinstance(value, tuple) else (value,)
    out = []
    for i, (comp, var) in enumerate(zip(comps, binding.var_names)):
        if isinstance(comp, bool) or not isinstance(comp, int):
            continue
        out.append((i, var, comp))
    return out


def _first_alternative(domain: tuple, exclude: set) -> object | None:
    for v in domain:
        if v not in exclude:
            return v
    return None


def _snake(callee: str) -> str:
    tail = callee.split(".")[-1]
    return "".join("_" + c.lower() if c.isupper() else c for c in tail).lstrip("_")


def hypothesize(
    report: ErrorReport,
    classification: Classification,
    candidate: CandidateProgram,
    table=None,
) -> list[FaultHypothesis]:
    """Rank candidate faulty parameters for a classified message.

    Parameters whose literal value appears in the message outrank
    name-similarity matches; an empty list sends the caller back to
    unguided enumeration.
    """
    tokens = classification.tokens
    numbers = set(_message_numbers(tokens))
    type_id = classification.pattern.type_id
    sketch = candidate.sketch
    out: list[tuple[float, int, FaultHypothesis]] = []

    if type_id == 1:
        span_tokens = classification.span_text.split()
        adjective = next((t for t in span_tokens if t.lower() in _FAULT_ADJS), "negative")
        fault_noun = span_tokens[-1]
        for order, binding in enumerate(candidate.bindings):
            comps = _int_components(binding)
            if adjective == "negative":
                bad = [(i, var, v) for i, var, v in comps if v < 0]
                if not bad:
                    continue
                expr = " and ".join(f"{var} >= 0" for _, var, _ in bad)
                tightened = " and ".join(f"{var} > 0" for _, var, _ in bad)
                mutation = {binding.hole_ids[i]: 0 for i, _, _ in bad}
                mutation2 = {binding.hole_ids[i]: 1 for i, _, _ in bad}
                score = 1.0 if any(v in numbers for _, _, v in bad) else name_similarity(
                    binding.param_name, fault_noun, table
                )
                out.append(
                    (
                        score,
                        order,
                        FaultHypothesis(
                            binding=binding,
                            suspect_value=binding.value,
                            candidate_constraint=parse_relation(expr),
                            hyponym_type=1,
                            score=score,
                            mutation=mutation,
                            tightened_constraint=parse_relation(tightened),
                            tightened_mutation=mutation2,
                        ),
                    )
                )
            elif adjective in ("empty", "zero"):
                bad = [(i, var, v) for i, var, v in comps if v == 0]
                for i, var, v in bad:
                    hole = sketch.hole(binding.hole_ids[i])
                    alt = _first_alternative(hole.domain, {0})
                    if alt is None:
                        continue
                    score = name_similarity(binding.param_name, fault_noun, table)
                    out.append(
                        (
                            score,
                            order,
                            FaultHypothesis(
                                binding=binding,
                                suspect_value=v,
                                candidate_constraint=parse_relation(f"{var} != 0"),
                                hyponym_type=1,
                                score=score,
                                mutation={hole.id: alt},
                            ),
                        )
                    )
            else:  # invalid / illegal / unknown / bad / missing
                for i, var, v in comps:
                    if numbers and v not in numbers:
                        continue
                    hole = sketch.hole(binding.hole_ids[i])
                    alt = _first_alternative(hole.domain, {v})
                    if alt is None:
                        continue
                    score = 1.0 if v in numbers else name_similarity(
                        binding.param_name, fault_noun, table
                    )
                    out.append(
                        (
                            score,
                            order,
                            FaultHypothesis(
                                binding=binding,
                                suspect_value=v,
                                candidate_constraint=parse_relation(f"{var} != {v}"),
                                hyponym_type=1,
                                score=score,
                                mutation={hole.id: alt},
                            ),
                        )
                    )

    elif type_id == 2:
        position = int(classification.span_text.split()[-1])
        op_token = tokens[0].text if tokens else ""
        call_indices = [
            i for i, call in enumerate(candidate.calls) if _snake(call.callee) == op_token
        ] or [len(candidate.calls) - 1]
        for order, binding in enumerate(candidate.bindings):
            if binding.call_index not in call_indices or binding.position != position:
                continue
            hyp = _exclusion_hypothesis(binding, sketch, 2, 1.0)
            if hyp is not None:
                out.append((1.0, order, hyp))

    elif type_id == 3:
        reshaping = [b for b in candidate.bindings if b.is_reshaping and b.hole_ids]
        for order, binding in enumerate(reshaping):
            hyp = _exclusion_hypothesis(binding, sketch, 3, 0.5)
            if hyp is not None:
                out.append((0.5, order, hyp))

    elif type_id == 4:
        subject = _subject_noun(tokens, classification.start)
        if subject is not None:
            scored = []
            for order, binding in enumerate(candidate.bindings):
                score = name_similarity(binding.param_name, subject, table)
                scored.append((score, order, binding))
            scored.sort(key=lambda t: (-t[0], t[1]))
            if scored and scored[0][0] > 0.0:
                score, order, binding = scored[0]
                hyp = _exclusion_hypothesis(binding, sketch, 4, score)
                if hyp is not None:
                    out.append((score, order, hyp))

    out.sort(key=lambda t: (-t[0], t[1]))
    return [h for _, _, h in out]


def _subject_noun(tokens: tuple[Token, ...], verb_index: int) -> str | None:
    for i in range(verb_index - 1, -1, -1):
        if tokens[i].has("NOUN"):
            return tokens[i].text
        if tokens[i].has("PUNCT"):
            break
    return None


def _exclusion_hypothesis(
    binding: ParamBinding, sketch, type_id: int, score: float
) -> FaultHypothesis | None:
    """`param != current value` (componentwise disjunction for pairs)."""
    comps = _int_components(binding)
    parts = []
    mutation: dict = {}
    for i, var, v in comps:
        parts.append(f"{var} != {v}")
        if not mutation:
            hole = sketch.hole(binding.hole_ids[i])
            alt = _first_alternative(hole.domain, {v})
            if alt is not None:
                mutation[hole.id] = alt
    if not comps and len(binding.hole_ids) == 1:
        # non-integer scalar hole: exclude by domain index
        hole = sketch.hole(binding.hole_ids[0])
        try:
            idx = hole.domain.index(binding.value)
        except ValueError:
            return None
        parts = [f"{binding.var_names[0]} != {idx}"]
        alt = _first_alternative(hole.domain, {binding.value})
        if alt is not None:
            mutation[hole.id] = alt
    if not parts or not mutation:
        return None
    expr = " or ".join(parts) if len(parts) > 1 else parts[0]
    return FaultHypothesis(
        binding=binding,
        suspect_value=binding.value,
        candidate_constraint=parse_relation(expr),
        hyponym_type=type_id,
        score=score,
        mutation=mutation,
    )


# --- mutation probes ----------------------------------------------------------

@dataclass(frozen=True)
class ProbeOutcome:
    status: str  # confirmed | rejected
    constraint: RelationExpr | None
    probes_used: int
    refined: bool = False


def probe(
    hypothesis: FaultHypothesis,
    candidate: CandidateProgram,
    report: ErrorReport,
    eval_fn,
) -> ProbeOutcome:
    """Validate a hypothesis with at most two mutated re-executions.

    ``eval_fn(candidate) -> (status, message)`` runs the line tests;
    status is "error" with the diagnostic, or "pass"/"value_mismatch"
    with None.  A mutation that runs without error counts as evidence
    even if the value is wrong: the constraint is about runnability.
    """
    from .constraints import realize

    original = normalize_message(report.message)
    assignment = candidate.assignment_dict()

    mutant1 = realize(candidate.sketch, {**assignment, **hypothesis.mutation})
    status1, message1 = eval_fn(mutant1)
    if status1 != "error":
        return ProbeOutcome("confirmed", hypothesis.candidate_constraint, probes_used=1)
    if normalize_message(message1) == original:
        return ProbeOutcome("rejected", None, probes_used=1)
    if hypothesis.tightened_constraint is None or hypothesis.tightened_mutation is None:
        return ProbeOutcome("confirmed", hypothesis.candidate_constraint, probes_used=1)

    # The boundary value itself still errors: try one strictly interior
    # value.  The tightened constraint is kept only when that run is
    # error-free; an unrelated residual error must not strengthen the
    # claim beyond what the first probe validated.
    mutant2 = realize(candidate.sketch, {**assignment, **hypothesis.tightened_mutation})
    status2, message2 = eval_fn(mutant2)
    if status2 != "error":
        return ProbeOutcome(
            "confirmed", hypothesis.tightened_constraint, probes_used=2, refined=True
        )
    if normalize_message(message2) == original:
        return ProbeOutcome("rejected", None, probes_used=2)
    return ProbeOutcome("confirmed", hypothesis.candidate_constraint, probes_used=2)
