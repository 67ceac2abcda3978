"""Word-level resources: the comparison-operator thesaurus, stopwords,
boolean qualifiers with antonym pairs, and the keyword lists.

Everything ships in ``data/lexicon.json`` and can be replaced per use
case; only the file shape is fixed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

OPERATOR_SYMBOLS = {">", "<", "==", ">=", "<=", "!="}


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class OperatorEntry:
    phrase: tuple[str, ...]
    quality: str
    operator: str


@dataclass(frozen=True)
class OperatorMatch:
    operator: str
    entry: OperatorEntry
    words: tuple[str, ...]   # the surface words the entry matched


class Lexicon:
    def __init__(self, data: dict):
        self.operators: list[OperatorEntry] = []
        qualities: dict[str, str] = {}
        for raw in data["operators"]:
            phrase = tuple(raw["phrase"].lower().split())
            if not phrase:
                raise LexiconError("empty operator phrase")
            symbol = raw["operator"]
            if symbol not in OPERATOR_SYMBOLS:
                raise LexiconError(f"unknown operator symbol {symbol!r}")
            quality = raw["quality"]
            if qualities.setdefault(quality, symbol) != symbol:
                raise LexiconError(
                    f"quality {quality!r} maps to more than one operator")
            self.operators.append(OperatorEntry(phrase, quality, symbol))
        # longest phrases first so a two-word span wins over one word
        self.operators.sort(key=lambda e: -len(e.phrase))

        self.stopwords = frozenset(w.lower() for w in data["stopwords"])
        self.antonyms: dict[str, str] = {}
        for a, b in data["antonyms"]:
            a, b = a.lower(), b.lower()
            self.antonyms[a] = b
            self.antonyms[b] = a
        self.singular_pronouns = frozenset(w.lower() for w in data["pronouns"]["singular"])
        self.plural_pronouns = frozenset(w.lower() for w in data["pronouns"]["plural"])
        self.pronouns = self.singular_pronouns | self.plural_pronouns
        self.units = tuple(data["units"])
        self.time_units = frozenset(data["time_units"])
        kw = data["keywords"]
        self.conditional_keywords = frozenset(w.lower() for w in kw["conditional"])
        self.until_keywords = frozenset(w.lower() for w in kw["until"])
        self.else_keywords = frozenset(w.lower() for w in kw["else"])
        self.coordinators = frozenset(w.lower() for w in kw["coordinators"])
        self.parameter_leading_particles = frozenset(
            w.lower() for w in data["parameter_leading_particles"])
        self.modal_frame_verbs = frozenset(w.lower() for w in data["modal_frame_verbs"])

    @classmethod
    def load(cls, path) -> "Lexicon":
        with open(path, encoding="utf-8") as fh:
            return cls(json.load(fh))

    @classmethod
    def default(cls) -> "Lexicon":
        text = resources.files("reqformal").joinpath("data/lexicon.json").read_text("utf-8")
        return cls(json.loads(text))

    def condition_keywords(self) -> frozenset[str]:
        return self.conditional_keywords | self.until_keywords


def match_operator(words: Sequence[str], lexicon: Lexicon,
                   lemmas: Sequence[str] | None = None) -> OperatorMatch | None:
    """Find the longest operator entry inside a word sequence.

    An entry matches a window if every entry word equals either the
    surface form or the lemma at that position (lowercased), so both
    "exceeds" and "exceed" hit the Superiority row.
    """
    surface = [w.lower() for w in words]
    lem = [w.lower() for w in (lemmas if lemmas is not None else words)]
    for entry in lexicon.operators:  # sorted longest first
        k = len(entry.phrase)
        for i in range(0, len(surface) - k + 1):
            if all(entry.phrase[j] in (surface[i + j], lem[i + j]) for j in range(k)):
                return OperatorMatch(entry.operator, entry, tuple(words[i:i + k]))
    return None


def lookup_operator(words: Sequence[str], lexicon: Lexicon,
                    lemmas: Sequence[str] | None = None) -> str | None:
    """Operator symbol for a word sequence, or None for boolean/assignment clauses."""
    found = match_operator(words, lexicon, lemmas)
    return found.operator if found else None


class BooleanVocabulary:
    """Corpus-scoped truth assignment for boolean qualifier words.

    The first qualifier seen is registered true; a word whose antonym is
    already registered gets the opposite value. Registration must happen
    in corpus document order (single writer), lookups are free.
    """

    def __init__(self, antonyms: dict[str, str] | None = None):
        self._antonyms = dict(antonyms or {})
        self._values: dict[str, bool] = {}

    def classify(self, word: str) -> tuple[bool, str]:
        """Return (truth value, how it was decided).

        The second element is one of "registered", "antonym", "first" or
        "unrelated"; "unrelated" means the word has no known antonym pair
        and callers should surface a diagnostic.
        """
        w = word.lower()
        if w in self._values:
            return self._values[w], "registered"
        antonym = self._antonyms.get(w)
        if antonym is not None and antonym in self._values:
            value = not self._values[antonym]
            self._values[w] = value
            return value, "antonym"
        self._values[w] = True
        return True, "first" if antonym is not None else "unrelated"

    def snapshot(self) -> dict[str, bool]:
        return dict(self._values)


def classify_boolean(word: str, vocab: BooleanVocabulary) -> bool:
    value, _ = vocab.classify(word)
    return value
