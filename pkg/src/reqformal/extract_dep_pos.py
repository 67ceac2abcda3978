"""Dependency/POS route: map clause constituents to syntactic entities,
then syntactic entities to relations via the configurable rule rows."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .decompose import Clause
from .lexicon import BooleanVocabulary, Lexicon, match_operator
from .model import Relation, normalize_identifier


class ExtractionError(ValueError):
    pass


class UnmappedClauseError(ExtractionError):
    pass


@dataclass
class DepRules:
    subject_deps: frozenset[str]
    object_direct_deps: frozenset[str]
    object_prep_deps: frozenset[str]
    predicate_companion_deps: frozenset[str]
    light_verbs: frozenset[str]
    adjective_deps: frozenset[str]
    negation_deps: frozenset[str]
    negation_lemmas: frozenset[str]
    copula_lemmas: frozenset[str]
    copula_signal_verb: str
    rows: list[dict]

    @classmethod
    def from_dict(cls, data: dict) -> "DepRules":
        syn = data["syntactic"]
        return cls(
            subject_deps=frozenset(syn["subject"]),
            object_direct_deps=frozenset(syn["object_direct"]),
            object_prep_deps=frozenset(syn["object_prepositional"]),
            predicate_companion_deps=frozenset(syn["predicate_companions"]),
            light_verbs=frozenset(syn["light_verbs"]),
            adjective_deps=frozenset(syn["adjective_deps"]),
            negation_deps=frozenset(syn["negation_deps"]),
            negation_lemmas=frozenset(syn["negation_lemmas"]),
            copula_lemmas=frozenset(data["copula"]["lemmas"]),
            copula_signal_verb=data["copula"]["assignment_verb"],
            rows=list(data["rows"]),
        )

    @classmethod
    def load(cls, path) -> "DepRules":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def default(cls) -> "DepRules":
        text = resources.files("reqformal").joinpath("data/rules_dep_pos.json").read_text("utf-8")
        return cls.from_dict(json.loads(text))


@dataclass
class SyntacticEntities:
    """Constituents of one clause, ready for the entity-mapping rows."""

    subject: tuple[str, ...] | None
    obj: tuple[str, ...] | None           # direct object (dobj/attr) if any
    prep_obj: tuple[str, ...] | None      # prepositional object (pobj)
    predicate: tuple[str, ...]            # surface words of the predicate
    predicate_signal: tuple[str, ...]     # lemma(+particles) used in signals
    is_copula: bool
    adjective: tuple[str, str] | None     # (text, lemma)
    adjective_next: str | None            # token right after the adjective
    negated: bool
    marker: str

    def object_words(self) -> tuple[str, ...] | None:
        return self.obj if self.obj is not None else self.prep_obj

    def present(self) -> set[str]:
        names = {"predicate"}
        if self.subject is not None:
            names.add("subject")
        if self.object_words() is not None:
            names.add("object")
        if self.adjective is not None:
            names.add("adjective")
        return names


def extract_syntactic_entities(clause: Clause, rules: DepRules) -> SyntacticEntities:
    """Read the clause's constituents off its dependency slice."""
    if clause.annotation is None or not clause.tokens:
        raise ExtractionError(f"clause {clause.text!r} has no dependency annotation")
    ann = clause.annotation
    try:
        root = clause.local_root()
    except ValueError as err:
        raise ExtractionError(str(err)) from None
    root_tok = ann.token(root)

    def span_words(indices) -> tuple[str, ...]:
        return tuple(w for w in clause.words(
            i for i in indices if ann.token(i).pos != "PUNCT"))

    subject_span: list[int] = []
    subject = None
    for child in clause.children(root):
        if clause.dep_of(child) in rules.subject_deps:
            subject_span = clause.subtree(child)
            subject = span_words(subject_span)
            break

    # objects anywhere under the root except inside the subject phrase
    in_subject = set(subject_span)
    direct = None
    prep = None
    for idx in clause.subtree(root):
        if idx == root or idx in in_subject:
            continue
        dep = clause.dep_of(idx)
        if dep in rules.object_direct_deps and direct is None:
            direct = span_words(clause.subtree(idx))
        elif dep in rules.object_prep_deps and prep is None:
            prep = span_words(clause.subtree(idx))

    adjective = None
    adjective_next = None
    for child in clause.children(root):
        tok = ann.token(child)
        if tok.pos == "ADJ" and clause.dep_of(child) in rules.adjective_deps:
            adjective = (tok.text, tok.lemma)
            if child + 1 in set(clause.tokens):
                adjective_next = ann.token(child + 1).text
            break

    negated = any(
        clause.dep_of(child) in rules.negation_deps
        or (ann.token(child).pos == "PART"
            and ann.token(child).lemma.lower() in rules.negation_lemmas)
        for child in clause.children(root))

    # predicate: the root verb plus its passive auxiliary / particle,
    # and the noun of a light-verb construction
    companions = [root]
    for child in clause.children(root):
        if clause.dep_of(child) in rules.predicate_companion_deps:
            companions.append(child)
    light_noun = None
    if root_tok.lemma.lower() in rules.light_verbs and prep is not None:
        for child in clause.children(root):
            if clause.dep_of(child) == "dobj" and ann.token(child).pos == "NOUN":
                light_noun = child
                companions.append(child)
                direct = None  # the noun belongs to the predicate, not the object
                break
    companions.sort()
    predicate = span_words(companions)

    is_copula = (root_tok.lemma.lower() in rules.copula_lemmas
                 and len(companions) == 1)
    signal_words = [root_tok.lemma.lower()]
    for idx in companions:
        if idx == root:
            continue
        tok = ann.token(idx)
        if clause.dep_of(idx) in rules.predicate_companion_deps and tok.pos != "AUX":
            signal_words.append(tok.text.lower())   # particle: switch off
        elif idx == light_noun:
            signal_words.append(tok.lemma.lower())

    if subject is None and direct is None and prep is None:
        raise ExtractionError(
            f"clause {clause.text!r}: found neither subject nor object")

    return SyntacticEntities(
        subject=subject,
        obj=direct,
        prep_obj=prep,
        predicate=predicate,
        predicate_signal=tuple(signal_words),
        is_copula=is_copula,
        adjective=adjective,
        adjective_next=adjective_next,
        negated=negated,
        marker=clause.keyword,
    )


def _strip_leading_particles(words: list[str], lexicon: Lexicon) -> list[str]:
    while words and words[0].lower() in lexicon.parameter_leading_particles:
        words = words[1:]
    return words


def _parameter(words: tuple[str, ...], lexicon: Lexicon,
               event_table: dict | None,
               drop: tuple[str, ...] = ()) -> str:
    dropped = [w for w in words if w not in drop]
    dropped = _strip_leading_particles(dropped, lexicon)
    return normalize_identifier(dropped, lexicon.stopwords, event_table)


def entities_to_relation(ent: SyntacticEntities, lexicon: Lexicon,
                         vocab: BooleanVocabulary,
                         rules: DepRules | None = None,
                         event_table: dict | None = None) -> Relation:
    """Apply the entity-mapping rows.

    An adjective that resolves to an operator makes the clause a
    comparison on the bare subject; a qualifier adjective with no object
    becomes a boolean comparison; otherwise the assignment rows apply,
    with the copula lemmatizing to "set".
    """
    rules = rules or DepRules.default()
    norm = lambda words: normalize_identifier(words, lexicon.stopwords, event_table)

    op_match = None
    if ent.adjective is not None:
        text, lemma = ent.adjective
        words, lemmas = [text], [lemma]
        if ent.adjective_next is not None:
            words.append(ent.adjective_next)
            lemmas.append(ent.adjective_next)
        op_match = match_operator(words, lexicon, lemmas)

    obj = ent.object_words()
    if op_match is not None:
        if ent.subject is None or obj is None:
            raise UnmappedClauseError(
                f"comparison adjective {ent.adjective[0]!r} without "
                f"subject and object (found: {sorted(ent.present())})")
        # comparisons take the prepositional object when both are present
        target = ent.prep_obj if ent.prep_obj is not None else obj
        return Relation(
            "comparison",
            signal=norm(ent.subject),
            operator=op_match.operator,
            parameter=_parameter(target, lexicon, event_table,
                                 drop=op_match.words),
            negated=ent.negated,
        )

    if ent.adjective is not None and obj is None:
        if ent.subject is None:
            raise UnmappedClauseError(
                f"qualifier {ent.adjective[0]!r} without a subject")
        value = vocab.classify(ent.adjective[1].lower())[0]
        return Relation(
            "comparison",
            signal=norm(ent.subject),
            operator="==",
            parameter="true" if value else "false",
            negated=ent.negated,
        )

    if ent.adjective is not None and obj is not None and ent.subject is not None:
        # predicate + adjective form the signal, the object the parameter
        signal = norm(ent.predicate_signal + (ent.adjective[1].lower(),))
        return Relation("assignment", signal=signal,
                        parameters=(_parameter(obj, lexicon, event_table),),
                        negated=ent.negated)

    if ent.subject is not None:
        verb = (rules.copula_signal_verb,) if ent.is_copula else ent.predicate_signal
        signal = norm(verb + tuple(ent.subject))
        params = ()
        if obj is not None:
            params = (_parameter(obj, lexicon, event_table),)
        return Relation("assignment", signal=signal, parameters=params,
                        negated=ent.negated)

    raise UnmappedClauseError(
        f"no entity-mapping row matches (found: {sorted(ent.present())})")
