"""The pseudocode DSL: canonical renderer, parser and comparator.

Grammar:

    model    := block+
    block    := kind "(" expr ")"          kind in {if, then, else, until, statement}
    expr     := term (("and" | "or") term)*
    term     := ["not"] relation
    relation := ident "(" args? ")" [op value]
    args     := value ("," value)*
    op       := "<" | ">" | "==" | "<=" | ">=" | "!="

Chains associate left to right; there is no expression nesting beyond
that. Rendering fixes 4-space indentation and single spaces inside block
parentheses, and wraps multi-relation expressions with the connective
leading the continuation line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    BLOCK_KINDS, BoolOp, Expr, Relation, RequirementModel, chain, flatten,
)

INDENT = "    "


class DslError(ValueError):
    pass


def render_relation(rel: Relation) -> str:
    prefix = "not " if rel.negated else ""
    if rel.kind == "assignment":
        return f"{prefix}{rel.signal}({', '.join(rel.parameters)})"
    return f"{prefix}{rel.signal}() {rel.operator} {rel.parameter}"


def render_pseudocode(model: RequirementModel) -> str:
    """Deterministic canonical rendering, one block per line (plus
    continuation lines for multi-relation expressions)."""
    lines: list[str] = []
    for kind, expr in model.blocks:
        indent = INDENT if kind == "then" else ""
        parts = flatten(expr)
        first = f"{indent}{kind}( {render_relation(parts[0][1])}"
        if len(parts) == 1:
            lines.append(first + " )")
            continue
        lines.append(first)
        for conn, rel in parts[1:-1]:
            lines.append(f"{indent}{INDENT}{conn} {render_relation(rel)}")
        conn, rel = parts[-1]
        lines.append(f"{indent}{INDENT}{conn} {render_relation(rel)} )")
    return "\n".join(lines) + "\n"


_TOKEN_RE = re.compile(r"""
    (?P<op>==|<=|>=|!=|<|>)
  | (?P<punct>[(),])
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*|\d[\w.]*)
  | (?P<junk>\S)
""", re.VERBOSE)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str


def _lex(text: str) -> list[_Tok]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        if m.lastgroup == "junk":
            raise DslError(f"unexpected character {m.group()!r}")
        tokens.append(_Tok(m.lastgroup, m.group()))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Tok]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Tok | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind: str | None = None, text: str | None = None) -> _Tok:
        tok = self.peek()
        if tok is None:
            raise DslError("unexpected end of input")
        if kind is not None and tok.kind != kind:
            raise DslError(f"expected {kind}, got {tok.text!r}")
        if text is not None and tok.text != text:
            raise DslError(f"expected {text!r}, got {tok.text!r}")
        self.pos += 1
        return tok

    def blocks(self) -> list[tuple[str, Expr]]:
        out = []
        while self.peek() is not None:
            kind = self.take("word").text
            if kind not in BLOCK_KINDS:
                raise DslError(f"unknown block kind {kind!r}")
            self.take("punct", "(")
            expr = self.expr()
            self.take("punct", ")")
            out.append((kind, expr))
        if not out:
            raise DslError("empty model text")
        return out

    def expr(self) -> Expr:
        parts: list[tuple[str | None, Relation]] = [(None, self.term())]
        while (tok := self.peek()) and tok.kind == "word" and tok.text in ("and", "or"):
            conn = self.take().text
            parts.append((conn, self.term()))
        return chain(parts)

    def term(self) -> Relation:
        negated = False
        tok = self.peek()
        if tok and tok.kind == "word" and tok.text == "not":
            self.take()
            negated = True
        name = self.take("word").text
        self.take("punct", "(")
        params: list[str] = []
        if self.peek() and self.peek().text != ")":
            params.append(self.take("word").text)
            while self.peek() and self.peek().text == ",":
                self.take()
                params.append(self.take("word").text)
        self.take("punct", ")")
        tok = self.peek()
        if tok and tok.kind == "op":
            op = self.take().text
            value = self.take("word").text
            if params:
                raise DslError(f"comparison on {name!r} must use empty parentheses")
            return Relation("comparison", name, operator=op, parameter=value,
                            negated=negated)
        return Relation("assignment", name, parameters=tuple(params), negated=negated)


def parse_blocks(text: str) -> list[tuple[str, Expr]]:
    """Grammar-level parse (no model invariants); used by the comparator."""
    return _Parser(_lex(text)).blocks()


def parse_pseudocode(text: str) -> RequirementModel:
    return RequirementModel.from_blocks(parse_blocks(text))


def canonical_equal(a: str, b: str) -> bool:
    """Whitespace-insensitive token equality of two parseable DSL texts."""
    ta, tb = _lex(a), _lex(b)
    _Parser(list(ta)).blocks()  # validity check only
    _Parser(list(tb)).blocks()
    return [(t.kind, t.text) for t in ta] == [(t.kind, t.text) for t in tb]
