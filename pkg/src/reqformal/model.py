"""Requirement models: relations, boolean combinations, and the block
structure they are assembled into."""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

SIGNAL_RE = re.compile(r"[a-z][a-z0-9_]*$")
LITERAL_RE = re.compile(r".*[_0-9]")
EVENT_ABBREV_RE = re.compile(r"E\d+$")

# canonical block order; "then" is rendered indented under "if"
BLOCK_KINDS = ("statement", "if", "then", "else", "until")


class ModelError(ValueError):
    pass


class NormalizationError(ModelError):
    pass


class StructureError(ModelError):
    pass


@dataclass(frozen=True)
class Relation:
    """Atomic model element.

    Assignments render as ``signal(parameter*)``, comparisons as
    ``signal() operator parameter``. Negation is a flag on the relation.
    """

    kind: str                           # "assignment" | "comparison"
    signal: str
    parameters: tuple[str, ...] = ()    # assignments only
    operator: str | None = None         # comparisons only
    parameter: str | None = None
    negated: bool = False

    def __post_init__(self):
        if self.kind == "comparison":
            if not self.operator or self.parameter is None:
                raise ModelError("comparison needs an operator and a parameter")
        elif self.kind == "assignment":
            if self.operator is not None or self.parameter is not None:
                raise ModelError("assignment must not carry an operator")
        else:
            raise ModelError(f"unknown relation kind {self.kind!r}")
        if not SIGNAL_RE.match(self.signal):
            raise ModelError(f"signal {self.signal!r} is not a normalized identifier")


@dataclass(frozen=True)
class BoolOp:
    op: str          # "and" | "or"
    left: "Expr"
    right: Relation  # chains associate to the left, so the right side is a leaf

    def __post_init__(self):
        if self.op not in ("and", "or"):
            raise ModelError(f"unknown connective {self.op!r}")


Expr = Union[Relation, BoolOp]


def chain(parts: Sequence[tuple[str | None, Relation]]) -> Expr:
    """Fold (connective, relation) pairs into a left-associated expression."""
    if not parts:
        raise ModelError("empty expression")
    expr: Expr = parts[0][1]
    for conn, rel in parts[1:]:
        expr = BoolOp(conn or "and", expr, rel)
    return expr


def flatten(expr: Expr) -> list[tuple[str | None, Relation]]:
    """Inverse of chain(): [(None, r0), (op1, r1), ...]."""
    if isinstance(expr, Relation):
        return [(None, expr)]
    parts = flatten(expr.left)
    parts.append((expr.op, expr.right))
    return parts


def relation_count(expr: Expr) -> int:
    return len(flatten(expr))


@dataclass(frozen=True)
class RequirementModel:
    """Ordered blocks, each holding a boolean combination of relations."""

    blocks: tuple[tuple[str, Expr], ...]

    def __post_init__(self):
        kinds = [k for k, _ in self.blocks]
        if not kinds:
            raise StructureError("empty model")
        if len(set(kinds)) != len(kinds):
            raise StructureError("duplicate block kind")
        unknown = set(kinds) - set(BLOCK_KINDS)
        if unknown:
            raise StructureError(f"unknown block kinds {sorted(unknown)}")
        has_if = "if" in kinds
        if ("then" in kinds) != has_if:
            raise StructureError("'then' is present exactly when 'if' is")
        if ("statement" in kinds) == has_if:
            raise StructureError("'statement' is present exactly when 'if' is absent")
        if "else" in kinds and not has_if:
            raise StructureError("'else' without 'if'")

    @classmethod
    def from_blocks(cls, pairs: Iterable[tuple[str, Expr]]) -> "RequirementModel":
        ordered = sorted(pairs, key=lambda kv: BLOCK_KINDS.index(kv[0]))
        return cls(tuple(ordered))

    def block(self, kind: str) -> Expr | None:
        for k, expr in self.blocks:
            if k == kind:
                return expr
        return None

    def relation_count(self) -> int:
        return sum(relation_count(expr) for _, expr in self.blocks)


def expand_events(words: Iterable[str], event_table: dict[str, str] | None) -> list[str]:
    """Back-map event abbreviations (E1, E2, ...) to their original names."""
    out: list[str] = []
    for word in words:
        if event_table and EVENT_ABBREV_RE.match(word) and word in event_table:
            out.extend(event_table[word].split())
        else:
            out.append(word)
    return out


def _is_punct(word: str) -> bool:
    return all(ch in string.punctuation for ch in word)


def normalize_identifier(words: Sequence[str], stopwords: frozenset[str] | set[str],
                         event_table: dict[str, str] | None = None) -> str:
    """Turn a word span into a model identifier.

    Stopwords and punctuation drop out, event abbreviations are restored,
    variable-like literals (anything with a digit or underscore, or an
    all-caps token) keep their casing, everything else is lowercased, and
    the remainder joins with underscores.
    """
    kept = []
    for word in expand_events(words, event_table):
        if _is_punct(word) or word.lower() in stopwords:
            continue
        if LITERAL_RE.match(word) or (len(word) > 1 and word.isupper()):
            kept.append(word)
        else:
            kept.append(word.lower())
    if not kept:
        raise NormalizationError(f"nothing left of {list(words)!r} after normalization")
    return "_".join(kept)


def assemble_model(items: Sequence[tuple["ClauseLike", Relation]]) -> RequirementModel:
    """Assign each clause's relation to a block and join the expressions.

    Conditions keyed if/when/while open the if-block, until-keyed ones the
    until-block, else/otherwise the else-block. Keyword-free clauses join
    the previous clause's block when a connective links them, otherwise
    they collect into then (or statement when no condition exists at all).
    A condition binds its assignments regardless of textual order.
    """
    if not items:
        raise StructureError("no clauses to assemble")
    groups: dict[str, list[tuple[str | None, Relation]]] = {}
    previous: str | None = None
    for clause, relation in items:
        keyword = getattr(clause, "keyword", "none")
        connective = getattr(clause, "connective", "none")
        if keyword in ("if", "when", "while"):
            target = "if"
        elif keyword == "until":
            target = "until"
        elif keyword == "else":
            target = "else"
        elif connective != "none" and previous is not None:
            target = previous
        else:
            target = "_default"
        conn = connective if connective != "none" else None
        groups.setdefault(target, []).append((conn, relation))
        previous = target

    default = groups.pop("_default", [])
    if default:
        groups.setdefault("then" if "if" in groups else "statement", []).extend(default)
    if "if" in groups and "then" not in groups:
        raise StructureError("condition without any assignment to bind to")
    if "else" in groups and "if" not in groups:
        raise StructureError("'else' clause without a condition")
    return RequirementModel.from_blocks(
        (kind, chain(parts)) for kind, parts in groups.items())


def model_to_json(model: RequirementModel) -> dict:
    """Machine-readable mirror of the block/expression tree."""

    def expr_node(expr: Expr) -> dict:
        if isinstance(expr, BoolOp):
            return {"type": expr.op, "left": expr_node(expr.left),
                    "right": expr_node(expr.right)}
        node: dict = {"type": "relation", "kind": expr.kind, "signal": expr.signal,
                      "negated": expr.negated}
        if expr.kind == "assignment":
            node["parameters"] = list(expr.parameters)
        else:
            node["operator"] = expr.operator
            node["parameter"] = expr.parameter
        return node

    return {"blocks": [{"kind": kind, "expr": expr_node(expr)}
                       for kind, expr in model.blocks]}


class ClauseLike:
    """Anything with .keyword and .connective attributes (see decompose)."""

    keyword: str
    connective: str
