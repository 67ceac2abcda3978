"""Split requirements into clauses that each express one primitive action.

Two routes: boundary splitting on the dependency tree (markers, root
conjunctions, noun-phrase conjunctions) or span assembly from semantic
role frames. Both produce Clause records carrying enough annotation
context for entity extraction.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, field, replace

from .annotations import DepAnnotation, SrlFrame, SrlSentence, Token
from .lexicon import Lexicon

_EDGE_PUNCT = {",", ".", ";", ":", "!", "?"}


@dataclass(frozen=True)
class Clause:
    """One decomposed span plus its annotation slice.

    ``tokens`` indexes into either the dependency annotation or the SRL
    sentence token list. ``overrides`` re-labels a token's (dep, head)
    when a conjunct was copied into the structural slot of its first
    conjunct; ``substitutions`` expand a pronoun token into the words of
    its antecedent.
    """

    text: str
    keyword: str = "none"          # if | when | while | until | else | none
    connective: str = "none"       # and | or | none (to the previous clause)
    annotation: DepAnnotation | None = None
    tokens: tuple[int, ...] = ()
    overrides: dict = field(default_factory=dict)       # idx -> (dep, head)
    substitutions: dict = field(default_factory=dict)   # idx -> tuple[str, ...]
    frame: SrlFrame | None = None
    sentence_tokens: tuple[str, ...] = ()
    time_constraint: str | None = None

    # -- dependency-slice helpers ------------------------------------

    def dep_of(self, idx: int) -> str:
        if idx in self.overrides:
            return self.overrides[idx][0]
        return self.annotation.token(idx).dep

    def head_of(self, idx: int) -> int:
        if idx in self.overrides:
            return self.overrides[idx][1]
        return self.annotation.token(idx).head

    def local_root(self) -> int:
        """The token whose head lies outside the clause (first such
        non-punctuation token in sentence order)."""
        token_set = set(self.tokens)
        for idx in self.tokens:
            tok = self.annotation.token(idx)
            if tok.pos == "PUNCT":
                continue
            if self.head_of(idx) not in token_set:
                return idx
        raise ValueError(f"clause {self.text!r} has no local root")

    def children(self, idx: int) -> list[int]:
        return [i for i in self.tokens if i != idx and self.head_of(i) == idx]

    def subtree(self, idx: int) -> list[int]:
        out = [idx]
        stack = [idx]
        while stack:
            for child in self.children(stack.pop()):
                out.append(child)
                stack.append(child)
        return sorted(out)

    def words(self, indices) -> list[str]:
        """Surface words for a span, expanding pronoun substitutions."""
        out: list[str] = []
        for idx in indices:
            if idx in self.substitutions:
                out.extend(self.substitutions[idx])
            else:
                out.append(self.annotation.token(idx).text)
        return out


def detokenize(words: list[str]) -> str:
    """Join tokens back into readable text (no space before closing
    punctuation, quote pairs hug their content)."""
    out: list[str] = []
    open_quotes: dict[str, bool] = {}
    for word in words:
        if word in ("'", '"'):
            is_open = not open_quotes.get(word, False)
            open_quotes[word] = is_open
            if is_open:
                out.append(" " + word if out else word)
            else:
                out.append(word)
            continue
        if word in _EDGE_PUNCT or word in (")", "]", "}", "%"):
            out.append(word)
        elif out and out[-1].endswith(("'", '"')) and open_quotes.get(out[-1][-1], False):
            out.append(word)
        elif word in ("(", "[", "{"):
            out.append(" " + word if out else word)
        else:
            out.append(" " + word if out else word)
    text = "".join(out)
    return re.sub(r"([([{])\s+", r"\1", text)


def clause_text(annotation: DepAnnotation, indices: tuple[int, ...],
                substitutions: dict | None = None) -> str:
    """Clause surface text: edge punctuation dropped, the rest detokenized."""
    idx = list(indices)
    while idx and annotation.token(idx[0]).text in _EDGE_PUNCT:
        idx.pop(0)
    while idx and annotation.token(idx[-1]).text in _EDGE_PUNCT:
        idx.pop()
    words: list[str] = []
    for i in idx:
        if substitutions and i in substitutions:
            words.extend(substitutions[i])
        else:
            words.append(annotation.token(i).text)
    return detokenize(words)


def with_substitutions(clause: Clause, substitutions: dict) -> Clause:
    return replace(
        clause,
        substitutions=substitutions,
        text=clause_text(clause.annotation, clause.tokens, substitutions),
    )


def subject_phrase(clause: Clause) -> tuple[list[str] | None, Token | None]:
    """(words, head token) of the leftmost subject noun phrase, or (None, None)."""
    if clause.annotation is None:
        return None, None
    subjects = [i for i in clause.tokens
                if clause.dep_of(i) in ("nsubj", "nsubjpass")]
    if not subjects:
        return None, None
    head = min(subjects)
    span = [i for i in clause.subtree(head)
            if clause.annotation.token(i).pos != "PUNCT"]
    return clause.words(span), clause.annotation.token(head)


# ---------------------------------------------------------------------------
# text-level rewriting

_BETWEEN_RE = re.compile(r"\bbetween\b", re.IGNORECASE)
_STOP_WORDS_AFTER = {"and", "or", "if", "when", "while", "until", "then",
                     "else", "otherwise"}


def rewrite_between(text: str) -> tuple[str, list[str]]:
    """Rewrite "between A and B" to "greater than A and less than B".

    Assumes A < B, which callers should surface for review; returns the
    rewritten text plus warnings (one per rewrite, or for a "between"
    with no paired "and").
    """
    warnings: list[str] = []
    while (m := _BETWEEN_RE.search(text)) is not None:
        tail = text[m.end():]
        tail_words = tail.split()
        if "and" not in tail_words:
            warnings.append('"between" without a paired "and" left unchanged')
            break
        and_pos = tail_words.index("and")
        a_words = tail_words[:and_pos]
        b_words = []
        for word in tail_words[and_pos + 1:]:
            bare = word.rstrip(string.punctuation)
            if not bare or bare.lower() in _STOP_WORDS_AFTER:
                break
            b_words.append(word)
            if word != bare:  # trailing punctuation ends the phrase
                break
        if not a_words or not b_words:
            warnings.append('"between" without two phrases left unchanged')
            break
        consumed = and_pos + 1 + len(b_words)
        rest = tail_words[consumed:]
        rewritten = "greater than " + " ".join(a_words) + " and less than " + " ".join(b_words)
        text = text[:m.start()] + rewritten + (" " + " ".join(rest) if rest else "")
        warnings.append(
            f'rewrote "between {" ".join(a_words)} and ..." assuming '
            f'{" ".join(a_words)} < {b_words[0].rstrip(string.punctuation)}; '
            "validate the decomposition")
    return text, warnings


# ---------------------------------------------------------------------------
# dependency-based decomposition

def _top_verb_chain(ann: DepAnnotation) -> set[int]:
    """The root verb and its conj chain of verbal heads."""
    root = ann.root_index()
    chain = {root}
    changed = True
    while changed:
        changed = False
        for tok in ann.tokens:
            if (tok.dep == "conj" and tok.head in chain
                    and tok.pos in ("VERB", "AUX") and tok.index not in chain):
                chain.add(tok.index)
                changed = True
    return chain


def split_on_markers(sentence: str, ann: DepAnnotation,
                     lexicon: Lexicon) -> list[Clause]:
    """Split at subordinating markers, else-words, and top-level
    coordinations. A sentence with no markers yields one clause."""
    condition_words = lexicon.condition_keywords()
    top_verbs = _top_verb_chain(ann)
    conj_heads = {t.head for t in ann.tokens
                  if t.dep == "conj" and t.index in top_verbs}

    boundaries: list[tuple[int, str | None, str | None]] = []
    for tok in ann.tokens:
        low = tok.text.lower()
        if low in condition_words and (tok.dep == "mark" or tok.pos == "SCONJ"):
            boundaries.append((tok.index, low, None))
        elif low in lexicon.else_keywords and tok.pos != "PUNCT":
            boundaries.append((tok.index, "else", None))
        elif (tok.dep == "cc" and low in lexicon.coordinators
              and tok.head in top_verbs and tok.head in conj_heads):
            boundaries.append((tok.index, None, low))

    clauses: list[Clause] = []
    start = 1
    pending_keyword = "none"
    pending_connective = "none"

    def emit(end: int) -> None:
        nonlocal pending_keyword, pending_connective
        indices = tuple(range(start, end + 1))
        if not indices or all(ann.token(i).pos == "PUNCT" for i in indices):
            if clauses and indices:  # stray punctuation joins the previous clause
                prev = clauses[-1]
                clauses[-1] = replace(prev, tokens=prev.tokens + indices)
            return
        clauses.append(Clause(
            text=clause_text(ann, indices),
            keyword=pending_keyword,
            connective=pending_connective,
            annotation=ann,
            tokens=indices,
        ))

    for index, keyword, connective in sorted(boundaries):
        if index > start:
            emit(index - 1)
        elif index == start and clauses:
            pass  # adjacent boundary, nothing to emit
        if connective is not None:
            start = index + 1  # coordinator itself is dropped, recorded below
            pending_keyword = "none"
            pending_connective = connective
        else:
            start = index  # marker stays at the head of its clause
            pending_keyword = keyword
            pending_connective = "none"
    emit(len(ann.tokens))
    return clauses


def split_root_conjunctions(clause: Clause, lexicon: Lexicon) -> list[Clause]:
    """Split a clause whose local root coordinates two verbal heads."""
    if clause.annotation is None:
        return [clause]
    root = clause.local_root()
    conjuncts = [i for i in clause.children(root)
                 if clause.dep_of(i) == "conj"
                 and clause.annotation.token(i).pos in ("VERB", "AUX")]
    if not conjuncts:
        return [clause]
    second = min(conjuncts)
    ccs = [i for i in clause.tokens
           if clause.dep_of(i) == "cc" and root < i < second
           and clause.annotation.token(i).text.lower() in lexicon.coordinators]
    if not ccs:
        return [clause]
    cc = max(ccs)
    cc_word = clause.annotation.token(cc).text.lower()
    left_indices = tuple(i for i in clause.tokens if i < cc)
    right_indices = tuple(i for i in clause.tokens if i > cc)
    left = replace(clause, tokens=left_indices,
                   text=clause_text(clause.annotation, left_indices,
                                    clause.substitutions))
    right = Clause(
        text=clause_text(clause.annotation, right_indices, clause.substitutions),
        keyword="none",
        connective=cc_word,
        annotation=clause.annotation,
        tokens=right_indices,
        substitutions=dict(clause.substitutions),
    )
    return [left] + split_root_conjunctions(right, lexicon)


def expand_np_conjunctions(clause: Clause, lexicon: Lexicon) -> list[Clause]:
    """Duplicate a clause whose object/predicative phrase coordinates two
    noun (or comparative adjective) phrases, prefixing the shared
    subject+predicate onto the second conjunct."""
    if clause.annotation is None:
        return [clause]
    ann = clause.annotation
    token_set = set(clause.tokens)

    for first in clause.tokens:
        f_tok = ann.token(first)
        conjuncts = [i for i in clause.children(first) if clause.dep_of(i) == "conj"]
        for second in conjuncts:
            s_tok = ann.token(second)
            nominal = {f_tok.pos, s_tok.pos} <= {"NOUN", "PROPN"}
            comparative = f_tok.pos == "ADJ" and s_tok.pos == "ADJ"
            if not (nominal or comparative):
                continue
            second_span = [i for i in clause.subtree(second) if i in token_set]
            if any(ann.token(i).pos in ("VERB", "AUX") for i in second_span):
                continue  # a second verb makes this a clausal conjunction
            ccs = [i for i in clause.children(first)
                   if clause.dep_of(i) == "cc"
                   and ann.token(i).text.lower() in lexicon.coordinators
                   and first < i < second]
            if not ccs:
                continue
            cc = max(ccs)
            cc_word = ann.token(cc).text.lower()
            drop = set(second_span) | {cc}
            first_span_start = min(
                i for i in clause.subtree(first) if i not in drop)
            base_indices = tuple(i for i in clause.tokens if i not in drop)
            prefix = tuple(i for i in clause.tokens if i < first_span_start)
            copy_indices = prefix + tuple(second_span)
            overrides = dict(clause.overrides)
            overrides[second] = (clause.dep_of(first), clause.head_of(first))

            base = replace(clause, tokens=base_indices,
                           text=clause_text(ann, base_indices, clause.substitutions))
            copy = Clause(
                text=clause_text(ann, copy_indices, clause.substitutions),
                keyword=clause.keyword,
                connective=cc_word,
                annotation=ann,
                tokens=copy_indices,
                overrides=overrides,
                substitutions=dict(clause.substitutions),
            )
            return [base] + expand_np_conjunctions(copy, lexicon)
    return [clause]


def decompose_sentence(sentence: str, ann: DepAnnotation,
                       lexicon: Lexicon) -> list[Clause]:
    """Marker split, then root-conjunction split, then NP expansion."""
    clauses: list[Clause] = []
    for part in split_on_markers(sentence, ann, lexicon):
        for sub in split_root_conjunctions(part, lexicon):
            clauses.extend(expand_np_conjunctions(sub, lexicon))
    return clauses


# ---------------------------------------------------------------------------
# frame-based decomposition

_TIME_TOKEN_RE = re.compile(r"\d+(\.\d+)?([a-zA-Zµ]*)$")


def _is_time_span(words: list[str], lexicon: Lexicon) -> bool:
    if words and words[0].lower() == "within":
        return True
    for word in words:
        m = _TIME_TOKEN_RE.match(word)
        if m and (m.group(2) in lexicon.time_units or not m.group(2)):
            return True
    return False


def frame_is_extractable(frame: SrlFrame, lexicon: Lexicon) -> tuple[bool, str]:
    """Apply the frame filters; returns (keep, reason-when-dropped)."""
    if len(frame.arguments) <= 1:
        return False, f"frame {frame.verb_text!r} has {len(frame.arguments)} argument(s)"
    if frame.verb_lemma.lower() in lexicon.modal_frame_verbs:
        return False, f"modal verb frame {frame.verb_text!r}"
    return True, ""


def frames_to_clauses(sentence: SrlSentence, lexicon: Lexicon,
                      dropped: list[str] | None = None) -> list[Clause]:
    """One clause per surviving frame, text assembled from the argument
    spans and the verb in token order.

    A full-clause ARGM-TMP span is left out of the clause; a single
    conditional word or a time-unit span is kept. Conditional keywords
    adjacent to (but unassigned in) a frame still mark the clause kind.
    """
    condition_words = lexicon.condition_keywords()
    clauses: list[Clause] = []
    prev_end = 0
    for frame in sorted(sentence.frames, key=lambda f: f.verb_index):
        keep, reason = frame_is_extractable(frame, lexicon)
        if not keep:
            if dropped is not None:
                dropped.append(reason)
            continue
        indices = {frame.verb_index}
        keyword = "none"
        time_constraint = None
        for arg in frame.arguments:
            words = [sentence.tokens[i - 1] for i in arg.indices()]
            if arg.label == "ARGM-TMP":
                if len(words) == 1 and words[0].lower() in condition_words:
                    keyword = words[0].lower()
                elif _is_time_span(words, lexicon):
                    time_constraint = " ".join(words)
                else:
                    continue  # full subordinate clause attached as TMP
            elif len(words) == 1 and words[0].lower() in lexicon.else_keywords:
                keyword = "else"
            indices.update(arg.indices())

        if keyword == "none":
            # an adjacent conditional word the labeller left unassigned
            before = min(indices) - 1
            while before >= 1 and sentence.tokens[before - 1] in (",", ";"):
                before -= 1
            if before >= 1 and before not in indices:
                word = sentence.tokens[before - 1].lower()
                if word in condition_words:
                    keyword = word
                elif word in lexicon.else_keywords:
                    keyword = "else"

        connective = "none"
        if prev_end and min(indices) > prev_end:
            gap = [sentence.tokens[i - 1].lower()
                   for i in range(prev_end + 1, min(indices))]
            for word in gap:
                if word in lexicon.coordinators:
                    connective = word
                    break
        prev_end = max(indices)

        ordered = tuple(sorted(indices))
        words = [sentence.tokens[i - 1] for i in ordered]
        while words and words[0] in _EDGE_PUNCT:
            words.pop(0)
        while words and words[-1] in _EDGE_PUNCT:
            words.pop()
        clauses.append(Clause(
            text=detokenize(words),
            keyword=keyword,
            connective=connective,
            tokens=ordered,
            frame=frame,
            sentence_tokens=sentence.tokens,
            time_constraint=time_constraint,
        ))
    return clauses
