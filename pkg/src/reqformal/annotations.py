"""Annotation formats that decouple the rule engine from any NLP toolkit.

Dependency/POS trees travel as CoNLL-U files, semantic role frames as a
small JSON format (one frame set per sentence). Both parsers validate the
structural invariants the extraction rules rely on, so everything
downstream can assume well-formed trees and frames.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

# the 17 universal POS categories
UPOS_TAGS = frozenset({
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
})

# the 37 universal dependency relations
UD_BASE_DEPS = frozenset({
    "acl", "advcl", "advmod", "amod", "appos", "aux", "case", "cc", "ccomp",
    "clf", "compound", "conj", "cop", "csubj", "dep", "det", "discourse",
    "dislocated", "expl", "fixed", "flat", "goeswith", "iobj", "list",
    "mark", "nmod", "nsubj", "nummod", "obj", "obl", "orphan", "parataxis",
    "punct", "reparandum", "root", "vocative", "xcomp",
})

# English-scheme extensions emitted by the common toolkits; the shipped
# extraction rules key on several of these (pobj, dobj, attr, auxpass, ...)
ENGLISH_EXTRA_DEPS = frozenset({
    "acomp", "agent", "attr", "auxpass", "csubjpass", "dative", "dobj",
    "intj", "meta", "neg", "npadvmod", "nsubjpass", "nummod", "oprd",
    "pcomp", "pobj", "poss", "preconj", "predet", "prep", "prt",
    "quantmod", "relcl",
})

DEP_TAGS = UD_BASE_DEPS | ENGLISH_EXTRA_DEPS

# 24 semantic role labels: 5 numbered plus 19 functional
NUMBERED_LABELS = frozenset({"ARG0", "ARG1", "ARG2", "ARG3", "ARG4"})
FUNCTIONAL_LABELS = frozenset({
    "ARGM-ADJ", "ARGM-ADV", "ARGM-CAU", "ARGM-COM", "ARGM-DIR", "ARGM-DIS",
    "ARGM-DSP", "ARGM-EXT", "ARGM-GOL", "ARGM-LOC", "ARGM-LVB", "ARGM-MNR",
    "ARGM-MOD", "ARGM-NEG", "ARGM-PNC", "ARGM-PRD", "ARGM-PRP", "ARGM-REC",
    "ARGM-TMP",
})
SRL_LABELS = NUMBERED_LABELS | FUNCTIONAL_LABELS


class AnnotationError(ValueError):
    """Structurally invalid annotation."""


class ConlluParseError(AnnotationError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SrlValidationError(AnnotationError):
    pass


@dataclass(frozen=True)
class Token:
    index: int          # 1-based position in the sentence
    text: str
    lemma: str
    pos: str            # universal POS tag
    dep: str            # dependency relation to the head
    head: int           # 0 for the sentence root
    xpos: str = "_"     # remaining CoNLL-U columns, preserved opaque
    feats: str = "_"
    deps: str = "_"
    misc: str = "_"


@dataclass(frozen=True)
class DepAnnotation:
    """One dependency-parsed sentence."""

    tokens: tuple[Token, ...]
    comments: tuple[str, ...] = ()

    def validate(self, name: str = "sentence") -> None:
        n = len(self.tokens)
        if n == 0:
            raise AnnotationError(f"{name}: empty sentence")
        for t in self.tokens:
            if t.index < 1 or t.head < 0 or t.head > n:
                raise AnnotationError(
                    f"{name}: token {t.index} has head {t.head} out of range")
            if t.head == t.index:
                raise AnnotationError(f"{name}: token {t.index} is its own head")
            if t.pos not in UPOS_TAGS:
                raise AnnotationError(f"{name}: unknown POS tag {t.pos!r}")
            if t.dep not in DEP_TAGS:
                raise AnnotationError(f"{name}: unknown dependency tag {t.dep!r}")
        roots = [t for t in self.tokens if t.head == 0]
        if len(roots) != 1 or roots[0].dep != "root":
            raise AnnotationError(f"{name}: expected exactly one root token")
        # the head links must form a tree: every token reachable from the root
        children: dict[int, list[int]] = {}
        for t in self.tokens:
            children.setdefault(t.head, []).append(t.index)
        seen: set[int] = set()
        stack = [roots[0].index]
        while stack:
            idx = stack.pop()
            if idx in seen:
                raise AnnotationError(f"{name}: cycle through token {idx}")
            seen.add(idx)
            stack.extend(children.get(idx, []))
        if len(seen) != n:
            raise AnnotationError(f"{name}: head links do not form a tree")

    def token(self, index: int) -> Token:
        return self.tokens[index - 1]

    def root_index(self) -> int:
        for t in self.tokens:
            if t.head == 0:
                return t.index
        raise AnnotationError("no root token")

    def children(self, index: int) -> list[int]:
        return [t.index for t in self.tokens if t.head == index]

    def subtree(self, index: int) -> list[int]:
        """Indices of the token and all its descendants, in sentence order."""
        out = [index]
        stack = [index]
        while stack:
            for child in self.children(stack.pop()):
                out.append(child)
                stack.append(child)
        return sorted(out)

    def text(self) -> str:
        return " ".join(t.text for t in self.tokens)


@dataclass(frozen=True)
class SrlArgument:
    label: str
    start: int          # 1-based token index, inclusive
    end: int
    text: str

    def indices(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class SrlFrame:
    verb_index: int
    verb_text: str
    verb_lemma: str
    arguments: tuple[SrlArgument, ...]

    def argument(self, label: str) -> SrlArgument | None:
        for arg in self.arguments:
            if arg.label == label:
                return arg
        return None

    def labels(self) -> list[str]:
        return [a.label for a in self.arguments]

    def covered_indices(self) -> set[int]:
        covered = {self.verb_index}
        for arg in self.arguments:
            covered.update(arg.indices())
        return covered

    def validate(self, n_tokens: int, tokens: tuple[str, ...] | None = None,
                 name: str = "frame") -> None:
        if not 1 <= self.verb_index <= n_tokens:
            raise SrlValidationError(f"{name}: verb index {self.verb_index} out of range")
        if tokens is not None and tokens[self.verb_index - 1] != self.verb_text:
            raise SrlValidationError(
                f"{name}: verb text {self.verb_text!r} does not match token "
                f"{tokens[self.verb_index - 1]!r}")
        taken = {self.verb_index}
        for arg in self.arguments:
            if arg.label not in SRL_LABELS:
                raise SrlValidationError(f"{name}: unknown label {arg.label!r}")
            if arg.start > arg.end or arg.start < 1 or arg.end > n_tokens:
                raise SrlValidationError(
                    f"{name}: bad span {arg.start}..{arg.end} for {arg.label}")
            span = set(arg.indices())
            if span & taken:
                raise SrlValidationError(
                    f"{name}: span of {arg.label} overlaps the verb or another argument")
            taken |= span
            if tokens is not None:
                expected = " ".join(tokens[i - 1] for i in arg.indices())
                if arg.text != expected:
                    raise SrlValidationError(
                        f"{name}: text of {arg.label} does not match its span "
                        f"({arg.text!r} vs {expected!r})")


@dataclass(frozen=True)
class SrlSentence:
    text: str
    tokens: tuple[str, ...]
    frames: tuple[SrlFrame, ...]


@dataclass
class SentenceAnnotation:
    """Everything known about one sentence of a requirement."""

    text: str
    dep: DepAnnotation | None = None
    srl: SrlSentence | None = None


@dataclass
class AnnotatedRequirement:
    id: str
    raw_text: str
    preprocessed_text: str
    event_table: dict[str, str] = field(default_factory=dict)
    sentences: list[SentenceAnnotation] = field(default_factory=list)

    def validate(self) -> None:
        for abbrev in self.event_table:
            if abbrev not in self.preprocessed_text:
                raise AnnotationError(
                    f"{self.id}: abbreviation {abbrev} missing from preprocessed text")
        for i, sent in enumerate(self.sentences, start=1):
            want = _squash(sent.text)
            if sent.dep is not None:
                got = _squash("".join(t.text for t in sent.dep.tokens))
                if got != want:
                    raise AnnotationError(
                        f"{self.id}: dependency tokens of sentence {i} do not "
                        f"spell the sentence text")
            if sent.srl is not None:
                got = _squash("".join(sent.srl.tokens))
                if got != want:
                    raise AnnotationError(
                        f"{self.id}: SRL tokens of sentence {i} do not spell "
                        f"the sentence text")


def _squash(text: str) -> str:
    return "".join(text.split())


def parse_conllu(content: str) -> list[DepAnnotation]:
    """Parse CoNLL-U text into one DepAnnotation per sentence block.

    Only the ID/FORM/LEMMA/UPOS/HEAD/DEPREL columns are interpreted; the
    remaining columns ride along opaquely. Multiword-token ranges (1-2)
    and empty nodes (1.1) do not take part in the basic tree and are
    skipped.
    """
    sentences: list[DepAnnotation] = []
    tokens: list[Token] = []
    comments: list[str] = []

    def finish(line_no: int) -> None:
        if not tokens and not comments:
            return
        if not tokens:
            raise ConlluParseError("comment block without tokens", line_no)
        ann = DepAnnotation(tuple(tokens), tuple(comments))
        ann.validate(name=f"sentence {len(sentences) + 1}")
        sentences.append(ann)
        tokens.clear()
        comments.clear()

    for line_no, raw in enumerate(content.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            finish(line_no)
            continue
        if line.startswith("#"):
            comments.append(line)
            continue
        cols = line.split("\t")
        if len(cols) < 8:
            raise ConlluParseError(
                f"expected at least 8 tab-separated columns, got {len(cols)}", line_no)
        cols += ["_"] * (10 - len(cols))
        tok_id = cols[0]
        if "-" in tok_id or "." in tok_id:
            continue  # multiword range / empty node
        try:
            index = int(tok_id)
            head = int(cols[6])
        except ValueError:
            raise ConlluParseError(f"non-numeric ID or HEAD in {line!r}", line_no)
        tokens.append(Token(
            index=index, text=cols[1], lemma=cols[2], pos=cols[3],
            dep=cols[7], head=head, xpos=cols[4], feats=cols[5],
            deps=cols[8], misc=cols[9],
        ))
    finish(len(content.splitlines()) + 1)
    return sentences


def render_conllu(sentences: list[DepAnnotation]) -> str:
    """Canonical serializer; parse_conllu(render_conllu(x)) == x."""
    blocks = []
    for sent in sentences:
        lines = list(sent.comments)
        for t in sent.tokens:
            lines.append("\t".join([
                str(t.index), t.text, t.lemma, t.pos, t.xpos, t.feats,
                str(t.head), t.dep, t.deps, t.misc,
            ]))
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def parse_srl_json(content: str) -> list[SrlSentence]:
    """Parse and validate the canonical SRL JSON format."""
    try:
        data = json.loads(content)
    except json.JSONDecodeError as err:
        raise SrlValidationError(f"not valid JSON: {err}") from err
    if not isinstance(data, dict) or "sentences" not in data:
        raise SrlValidationError("top-level object must have a 'sentences' list")
    sentences = []
    for s_no, sent in enumerate(data["sentences"], start=1):
        tokens = tuple(sent.get("tokens", ()))
        if not tokens:
            raise SrlValidationError(f"sentence {s_no}: missing tokens")
        frames = []
        for f_no, frame in enumerate(sent.get("frames", ()), start=1):
            verb = frame.get("verb", {})
            args = tuple(
                SrlArgument(a["label"], int(a["start"]), int(a["end"]), a.get("text", ""))
                for a in frame.get("arguments", ())
            )
            parsed = SrlFrame(
                verb_index=int(verb["index"]),
                verb_text=verb["text"],
                verb_lemma=verb["lemma"],
                arguments=args,
            )
            parsed.validate(len(tokens), tokens,
                            name=f"sentence {s_no} frame {f_no}")
            frames.append(parsed)
        sentences.append(SrlSentence(
            text=sent.get("text", " ".join(tokens)),
            tokens=tokens,
            frames=tuple(frames),
        ))
    return sentences


def render_srl_json(sentences: list[SrlSentence]) -> str:
    """Canonical serializer; parse_srl_json(render_srl_json(x)) == x."""
    doc = {"sentences": [
        {
            "text": s.text,
            "tokens": list(s.tokens),
            "frames": [
                {
                    "verb": {"index": f.verb_index, "text": f.verb_text,
                             "lemma": f.verb_lemma},
                    "arguments": [
                        {"label": a.label, "start": a.start, "end": a.end,
                         "text": a.text}
                        for a in f.arguments
                    ],
                }
                for f in s.frames
            ],
        }
        for s in sentences
    ]}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
