"""Infix relation expressions over holes and shape symbols.

Grammar (binding tightest last):

    expr    := disj
    disj    := conj ("or" conj)*
    conj    := cmp ("and" cmp)*
    cmp     := sum (("=="|"!="|"<="|">="|"<"|">") sum)?
    sum     := term (("+"|"-") term)*
    term    := unary (("*"|"/") unary)*
    unary   := "-" unary | atom
    atom    := INT | IDENT | "(" expr ")"

Division is integer floor division.  Evaluation happens over a complete
integer environment; referencing a missing variable or dividing by zero
raises ``RelationEvalError`` (treated as "constraint not satisfied" by the
enumeration engine).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ValidationError


class RelationEvalError(Exception):
    pass


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / == != < <= > >= and or
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


Node = Const | Var | BinOp | Neg

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>==|!=|<=|>=|[-+*/<>()]))"
)


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValidationError(f"bad relation syntax at {text[pos:]!r}")
        tokens.append(m.group(m.lastgroup))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValidationError("relation ended unexpectedly")
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise ValidationError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> Node:
        node = self.disj()
        if self.peek() is not None:
            raise ValidationError(f"trailing tokens in relation: {self.tokens[self.i:]}")
        return node

    def disj(self) -> Node:
        node = self.conj()
        while self.peek() == "or":
            self.take()
            node = BinOp("or", node, self.conj())
        return node

    def conj(self) -> Node:
        node = self.cmp()
        while self.peek() == "and":
            self.take()
            node = BinOp("and", node, self.cmp())
        return node

    def cmp(self) -> Node:
        node = self.sum()
        if self.peek() in ("==", "!=", "<", "<=", ">", ">="):
            op = self.take()
            node = BinOp(op, node, self.sum())
        return node

    def sum(self) -> Node:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek() == "-":
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Node:
        tok = self.take()
        if tok == "(":
            node = self.disj()
            self.expect(")")
            return node
        if re.fullmatch(r"\d+", tok):
            return Const(int(tok))
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok) and tok not in ("and", "or"):
            return Var(tok)
        raise ValidationError(f"unexpected token {tok!r} in relation")


@dataclass(frozen=True)
class RelationExpr:
    """Parsed relation with its source text (used for printing/provenance)."""

    text: str
    root: Node

    def variables(self) -> frozenset[str]:
        out: set[str] = set()

        def walk(node: Node) -> None:
            if isinstance(node, Var):
                out.add(node.name)
            elif isinstance(node, BinOp):
                walk(node.left)
                walk(node.right)
            elif isinstance(node, Neg):
                walk(node.operand)

        walk(self.root)
        return frozenset(out)

    def evaluate(self, env: dict[str, int]):
        return _eval(self.root, env)

    def holds(self, env: dict[str, int]) -> bool:
        """Truthiness under the env; evaluation failure counts as False."""
        try:
            return bool(self.evaluate(env))
        except RelationEvalError:
            return False


def _eval(node: Node, env: dict[str, int]):
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        try:
            return env[node.name]
        except KeyError:
            raise RelationEvalError(f"unbound variable {node.name!r}") from None
    if isinstance(node, Neg):
        return -_eval(node.operand, env)
    assert isinstance(node, BinOp)
    if node.op == "and":
        return bool(_eval(node.left, env)) and bool(_eval(node.right, env))
    if node.op == "or":
        return bool(_eval(node.left, env)) or bool(_eval(node.right, env))
    lhs = _eval(node.left, env)
    rhs = _eval(node.right, env)
    if node.op == "+":
        return lhs + rhs
    if node.op == "-":
        return lhs - rhs
    if node.op == "*":
        return lhs * rhs
    if node.op == "/":
        if rhs == 0:
            raise RelationEvalError("division by zero")
        return lhs // rhs
    if node.op == "==":
        return lhs == rhs
    if node.op == "!=":
        return lhs != rhs
    if node.op == "<":
        return lhs < rhs
    if node.op == "<=":
        return lhs <= rhs
    if node.op == ">":
        return lhs > rhs
    if node.op == ">=":
        return lhs >= rhs
    raise AssertionError(node.op)


def parse_relation(text: str) -> RelationExpr:
    return RelationExpr(text=text.strip(), root=_Parser(_tokenize(text)).parse())


# Shape symbols an authored relation may reference in addition to the
# entry's own parameter variables.
SHAPE_SYMBOLS = frozenset(
    [f"in_{i}" for i in range(4)] + [f"out_{i}" for i in range(4)]
)
