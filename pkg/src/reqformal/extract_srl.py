"""Semantic-role route: map frames to relations via the construct rows."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .decompose import Clause
from .lexicon import BooleanVocabulary, Lexicon, match_operator
from .model import Relation, normalize_identifier

CONSUMED_LABELS = {
    "ARG0", "ARG1", "ARG2", "ARG3", "ARG4",
    "ARGM-TMP", "ARGM-NEG", "ARGM-PRD", "ARGM-LOC",
}


class FrameError(ValueError):
    pass


class UnmappedFrameError(FrameError):
    pass


class MissingOperatorError(FrameError):
    pass


@dataclass
class SrlRules:
    assignment_rows: list[dict]
    condition_rows: list[dict]
    copula_lemmas: frozenset[str]
    copula_signal_verb: str

    @classmethod
    def from_dict(cls, data: dict) -> "SrlRules":
        return cls(
            assignment_rows=list(data["assignment_rows"]),
            condition_rows=list(data["condition_rows"]),
            copula_lemmas=frozenset(data["copula"]["lemmas"]),
            copula_signal_verb=data["copula"]["assignment_verb"],
        )

    @classmethod
    def load(cls, path) -> "SrlRules":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def default(cls) -> "SrlRules":
        text = resources.files("reqformal").joinpath("data/rules_srl.json").read_text("utf-8")
        return cls.from_dict(json.loads(text))


@dataclass
class FrameRelationDraft:
    """Bookkeeping for diagnostics: which construct fired and why."""

    construct: str
    clause_kind: str                 # "condition" | "assignment"
    negated: bool
    time_constraint: str | None
    notes: list[str]


def _arg_words(clause: Clause, label_arg) -> list[str]:
    return [clause.sentence_tokens[i - 1] for i in label_arg.indices()]


def _strip_leading_particles(words: list[str], lexicon: Lexicon) -> list[str]:
    while words and words[0].lower() in lexicon.parameter_leading_particles:
        words = words[1:]
    return words


def frame_to_relation(clause: Clause, event_table: dict, lexicon: Lexicon,
                      vocab: BooleanVocabulary,
                      rules: SrlRules | None = None,
                      ) -> tuple[Relation, FrameRelationDraft]:
    """Map one surviving frame to a relation.

    The clause kind comes from the conditional cue recorded during
    decomposition (a retained single-word ARGM-TMP or an adjacent
    unassigned keyword). Condition constructs read the operator off the
    verb, retrying with the next sentence word when the verb alone misses
    the operator table.
    """
    rules = rules or SrlRules.default()
    frame = clause.frame
    if frame is None:
        raise FrameError(f"clause {clause.text!r} carries no frame")
    notes: list[str] = []
    labels = frame.labels()
    is_condition = clause.keyword in ("if", "when", "while", "until")
    negated = "ARGM-NEG" in labels

    for arg in frame.arguments:
        if arg.label not in CONSUMED_LABELS:
            notes.append(f"argument {arg.label} ({arg.text!r}) not consumed by any rule")
    if "ARG2" in labels and "ARGM-PRD" in labels:
        notes.append("both ARG2 and ARGM-PRD present; first matching row wins")

    norm = lambda words: normalize_identifier(words, lexicon.stopwords, event_table)

    if is_condition:
        row = None
        for candidate in rules.condition_rows:
            if candidate["signal"] in labels and candidate["parameter"] in labels:
                row = candidate
                break
        if row is None:
            raise UnmappedFrameError(
                f"no condition construct matches labels {sorted(set(labels))} "
                f"for clause {clause.text!r}")
        signal_arg = frame.argument(row["signal"])
        param_arg = frame.argument(row["parameter"])

        # operator from the verb, folding an immediately preceding
        # negation into the phrase first ("not pass" -> <)
        neg_arg = frame.argument("ARGM-NEG")
        op = None
        if neg_arg is not None and neg_arg.end == frame.verb_index - 1:
            op = match_operator(
                [neg_arg.text, frame.verb_text], lexicon,
                [neg_arg.text, frame.verb_lemma])
            if op is not None:
                negated = False
                notes.append("negation folded into the operator phrase")
        if op is None:
            op = match_operator([frame.verb_text], lexicon, [frame.verb_lemma])
        next_word = None
        if op is None and frame.verb_index < len(clause.sentence_tokens):
            next_word = clause.sentence_tokens[frame.verb_index]
            op = match_operator([frame.verb_text, next_word], lexicon,
                                [frame.verb_lemma, next_word])

        param_words = _arg_words(clause, param_arg)
        if op is not None:
            param_words = [w for w in param_words if w not in op.words]
        param_words = _strip_leading_particles(param_words, lexicon)

        if op is None:
            if (frame.verb_lemma.lower() in rules.copula_lemmas
                    and len(param_words) == 1):
                # boolean qualifier in a copular condition
                value = vocab.classify(param_words[0].lower())[0]
                draft = FrameRelationDraft(row["construct"], "condition",
                                           negated, clause.time_constraint, notes)
                return Relation(
                    "comparison", signal=norm(_arg_words(clause, signal_arg)),
                    operator="==", parameter="true" if value else "false",
                    negated=negated,
                ), draft
            raise MissingOperatorError(
                f"no operator for verb {frame.verb_text!r} (also tried "
                f"{(frame.verb_text + ' ' + next_word) if next_word else 'nothing else'!r}) "
                f"in clause {clause.text!r}")
        if not param_words:
            raise UnmappedFrameError(
                f"operator {op.operator} found but no parameter remains in "
                f"clause {clause.text!r}")
        draft = FrameRelationDraft(row["construct"], "condition", negated,
                                   clause.time_constraint, notes)
        return Relation(
            "comparison", signal=norm(_arg_words(clause, signal_arg)),
            operator=op.operator,
            parameter=norm(param_words),
            negated=negated,
        ), draft

    # assignment constructs
    arg1 = frame.argument("ARG1")
    if arg1 is None:
        raise UnmappedFrameError(
            f"no assignment construct matches labels {sorted(set(labels))} "
            f"for clause {clause.text!r}")
    row = None
    for candidate in rules.assignment_rows:
        content = candidate["content"]
        if content is None or content in labels:
            row = candidate
            break
    verb = (rules.copula_signal_verb
            if frame.verb_lemma.lower() in rules.copula_lemmas
            else frame.verb_lemma.lower())
    signal = norm([verb] + _arg_words(clause, arg1))
    params: tuple[str, ...] = ()
    if row["content"] is not None:
        content_words = _strip_leading_particles(
            _arg_words(clause, frame.argument(row["content"])), lexicon)
        params = (norm(content_words),)
    draft = FrameRelationDraft(row["construct"], "assignment", negated,
                               clause.time_constraint, notes)
    return Relation("assignment", signal=signal, parameters=params,
                    negated=negated), draft
