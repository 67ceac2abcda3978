"""Text cleanup and pronoun resolution ahead of decomposition.

The text-level steps (markup stripping, event abbreviation) run before a
requirement is handed to the annotator, so the committed annotations
always describe the cleaned text. Pronoun resolution needs parse
information and therefore runs last, on the decomposed clauses.
"""

from __future__ import annotations

import re
from typing import Iterable

from .lexicon import Lexicon

# abbreviation -> original quoted event name, in order of first occurrence
EventTable = dict[str, str]

_QUOTE_PAIRS = (('"', '"'), ("'", "'"), ("“", "”"), ("‘", "’"))
_ABBREV_TOKEN_RE = re.compile(r"\bE(\d+)\b")


def abbreviate_events(text: str) -> tuple[str, EventTable, list[str]]:
    """Replace quoted multi-word event names with E1, E2, ...

    Single-token quoted literals ('E_BROKEN') are values, not event
    names, and keep their quotes. Returns the rewritten text, the
    abbreviation table, and any warnings (unbalanced quotes). Idempotent:
    already-abbreviated text comes back unchanged with an empty table.
    """
    warnings: list[str] = []
    spans: list[tuple[int, int, str]] = []  # (start, end, inner text)
    for opening, closing in _QUOTE_PAIRS:
        pattern = re.compile(re.escape(opening) + r"([^" +
                             re.escape(opening + closing) + r"]*)" +
                             re.escape(closing))
        pos = 0
        while (m := pattern.search(text, pos)) is not None:
            spans.append((m.start(), m.end(), m.group(1)))
            pos = m.end()
        remainder = pattern.sub("", text)
        if opening == closing:
            if remainder.count(opening) % 2:
                warnings.append(f"unbalanced {opening} quote left untouched")
        elif remainder.count(opening) != remainder.count(closing):
            warnings.append(f"unbalanced {opening}...{closing} quote left untouched")

    # numbering skips any E<n> already present in the text
    used = {int(n) for n in _ABBREV_TOKEN_RE.findall(text)}
    table: EventTable = {}
    out = []
    cursor = 0
    next_n = 1
    for start, end, inner in sorted(spans):
        if start < cursor:
            continue  # overlapping pairing from a different quote style
        if len(inner.split()) < 2:
            continue  # single-token literal, keep the quotes
        while next_n in used:
            next_n += 1
        abbrev = f"E{next_n}"
        used.add(next_n)
        table[abbrev] = inner
        out.append(text[cursor:start])
        out.append(abbrev)
        cursor = end
    out.append(text[cursor:])
    return "".join(out), table, warnings


def strip_markup(text: str, lexicon: Lexicon) -> str:
    """Drop square brackets around variables and any unit right after them.

    "exceeds [T_Hi] ºC" becomes "exceeds T_Hi". Units elsewhere in the
    text are left alone. Idempotent best-effort cleaning.
    """
    units = sorted(lexicon.units, key=len, reverse=True)
    unit_alt = "|".join(re.escape(u) for u in units)
    pattern = re.compile(
        r"\[([^][]+)\](?:\s*(?:" + unit_alt + r")(?=$|[\s.,;:!?)]))?")
    return pattern.sub(lambda m: m.group(1), text)


def _number_matches(pronoun: str, head_text: str, head_lemma: str,
                    lexicon: Lexicon) -> bool:
    # plural surface forms differ from their lemma (valves vs valve)
    plural_antecedent = head_text.lower() != head_lemma.lower()
    if pronoun in lexicon.plural_pronouns:
        return plural_antecedent
    return not plural_antecedent


def resolve_pronouns(clauses: list, lexicon: Lexicon,
                     number_check: bool = False) -> tuple[list, list[str]]:
    """Replace third-person pronouns with the farthest subject.

    For each pronoun the earlier clauses are scanned nearest-first and
    the leftmost subject noun phrase (with its modifiers and
    prepositional attachments) of the first clause that has one is
    substituted. Pronouns without any antecedent candidate stay untouched
    and are reported. Returns (clauses, warnings).
    """
    from . import decompose  # clause helpers; import here to avoid a cycle

    warnings: list[str] = []
    resolved: list = []
    for pos, clause in enumerate(clauses):
        if clause.annotation is None:
            resolved.append(clause)
            continue
        substitutions = dict(clause.substitutions)
        changed = False
        for idx in clause.tokens:
            tok = clause.annotation.token(idx)
            if tok.pos != "PRON" or tok.text.lower() not in lexicon.pronouns:
                continue
            antecedent = None
            for earlier in reversed(resolved[:pos]):
                words, head = decompose.subject_phrase(earlier)
                if head is None or head.pos == "PRON":
                    continue
                if number_check and not _number_matches(
                        tok.text.lower(), head.text, head.lemma, lexicon):
                    continue
                antecedent = words
                break
            if antecedent is None:
                warnings.append(
                    f"unresolved pronoun {tok.text!r} in clause {clause.text!r}")
                continue
            substitutions[idx] = tuple(antecedent)
            changed = True
        if changed:
            resolved.append(decompose.with_substitutions(clause, substitutions))
        else:
            resolved.append(clause)
    return resolved, warnings
