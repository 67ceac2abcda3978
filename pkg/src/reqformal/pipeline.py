"""Corpus-level orchestration: preprocess, decompose, extract, assemble,
render, and report diagnostics. The CLI is a thin wrapper over this."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from . import preprocess
from .annotations import (
    AnnotatedRequirement, AnnotationError, SentenceAnnotation,
    parse_conllu, parse_srl_json,
)
from .decompose import (
    Clause, decompose_sentence, frames_to_clauses, rewrite_between,
)
from .extract_dep_pos import (
    DepRules, ExtractionError, entities_to_relation, extract_syntactic_entities,
)
from .extract_srl import FrameError, SrlRules, frame_to_relation
from .lexicon import BooleanVocabulary, Lexicon
from .model import (
    ModelError, Relation, RequirementModel, assemble_model, model_to_json,
)
from .dsl import canonical_equal, render_pseudocode

APPROACHES = ("dep-pos", "srl")

_SENTENCE_SPLIT_RE = re.compile(r"(?<=[.!?])\s+")


@dataclass
class Diagnostic:
    requirement: str
    severity: str   # "error" | "warning" | "info"
    code: str
    message: str


@dataclass
class Diagnostics:
    entries: list[Diagnostic] = field(default_factory=list)

    def add(self, requirement: str, severity: str, code: str, message: str) -> None:
        self.entries.append(Diagnostic(requirement, severity, code, message))

    def error(self, requirement: str, code: str, message: str) -> None:
        self.add(requirement, "error", code, message)

    def warning(self, requirement: str, code: str, message: str) -> None:
        self.add(requirement, "warning", code, message)

    def info(self, requirement: str, code: str, message: str) -> None:
        self.add(requirement, "info", code, message)

    def errors(self) -> list[Diagnostic]:
        return [d for d in self.entries if d.severity == "error"]

    def warnings(self) -> list[Diagnostic]:
        return [d for d in self.entries if d.severity == "warning"]

    def to_json(self) -> dict:
        by_req: dict[str, list[dict]] = {}
        for d in self.entries:
            by_req.setdefault(d.requirement, []).append(
                {"severity": d.severity, "code": d.code, "message": d.message})
        return {
            "requirements": by_req,
            "summary": {"errors": len(self.errors()),
                        "warnings": len(self.warnings())},
        }


@dataclass
class RunConfig:
    approach: str
    corpus_path: Path
    annotations_dir: Path
    out_dir: Path | None = None
    lexicon_path: Path | None = None
    rules_path: Path | None = None
    strict: bool = False
    number_check: bool = False

    def __post_init__(self):
        if self.approach not in APPROACHES:
            raise ValueError(f"approach must be one of {APPROACHES}")


def read_corpus(path: Path) -> list[tuple[str, str]]:
    """Plain-text corpus: blank-line-separated blocks, first line '# <id>'."""
    blocks = re.split(r"\n\s*\n", Path(path).read_text("utf-8").strip())
    corpus: list[tuple[str, str]] = []
    seen: set[str] = set()
    for block in blocks:
        if not block.strip():
            continue
        lines = block.strip().splitlines()
        header = lines[0].strip()
        if not header.startswith("#"):
            raise ValueError(f"corpus block does not start with '# <id>': {header!r}")
        req_id = header.lstrip("#").strip()
        if not req_id or req_id in seen:
            raise ValueError(f"missing or duplicate requirement id {req_id!r}")
        seen.add(req_id)
        corpus.append((req_id, " ".join(l.strip() for l in lines[1:]).strip()))
    return corpus


def split_sentences(text: str) -> list[str]:
    return [s for s in _SENTENCE_SPLIT_RE.split(text.strip()) if s]


def prepare_requirement(req_id: str, raw_text: str, lexicon: Lexicon,
                        diagnostics: Diagnostics) -> tuple[str, dict]:
    """Text-level preprocessing: markup, event abbreviation, between-rewrite."""
    text = preprocess.strip_markup(raw_text, lexicon)
    text, event_table, quote_warnings = preprocess.abbreviate_events(text)
    for warning in quote_warnings:
        diagnostics.warning(req_id, "unbalanced-quote", warning)
    text, between_warnings = rewrite_between(text)
    for warning in between_warnings:
        if "unchanged" in warning:
            diagnostics.warning(req_id, "between-unpaired", warning)
        else:
            diagnostics.warning(req_id, "between-assumption", warning)
    return text, event_table


def load_requirement(req_id: str, raw_text: str, annotations_dir: Path,
                     approach: str, lexicon: Lexicon,
                     diagnostics: Diagnostics) -> AnnotatedRequirement | None:
    """Build the annotated requirement, or record why it cannot be built."""
    text, event_table = prepare_requirement(req_id, raw_text, lexicon, diagnostics)
    sentences = [SentenceAnnotation(text=s) for s in split_sentences(text)]

    dep_path = Path(annotations_dir) / f"{req_id}.conllu"
    srl_path = Path(annotations_dir) / f"{req_id}.srl.json"
    need_dep = approach == "dep-pos"
    need_srl = approach == "srl"

    if need_dep:
        if not dep_path.exists():
            diagnostics.error(req_id, "missing-annotation",
                              f"no dependency annotation at {dep_path.name}")
            return None
        parsed = parse_conllu(dep_path.read_text("utf-8"))
        if len(parsed) != len(sentences):
            diagnostics.error(
                req_id, "annotation-mismatch",
                f"{dep_path.name} has {len(parsed)} sentences, text has {len(sentences)}")
            return None
        for sent, ann in zip(sentences, parsed):
            sent.dep = ann
    if need_srl:
        if not srl_path.exists():
            diagnostics.error(req_id, "missing-annotation",
                              f"no SRL annotation at {srl_path.name}")
            return None
        parsed_srl = parse_srl_json(srl_path.read_text("utf-8"))
        if len(parsed_srl) != len(sentences):
            diagnostics.error(
                req_id, "annotation-mismatch",
                f"{srl_path.name} has {len(parsed_srl)} sentences, text has {len(sentences)}")
            return None
        for sent, srl in zip(sentences, parsed_srl):
            sent.srl = srl

    req = AnnotatedRequirement(
        id=req_id, raw_text=raw_text, preprocessed_text=text,
        event_table=event_table, sentences=sentences)
    req.validate()
    return req


def formalize_requirement(req: AnnotatedRequirement, approach: str,
                          lexicon: Lexicon, vocab: BooleanVocabulary,
                          diagnostics: Diagnostics,
                          dep_rules: DepRules | None = None,
                          srl_rules: SrlRules | None = None,
                          number_check: bool = False) -> RequirementModel | None:
    """Run decomposition + extraction + assembly for one requirement.

    Returns None (with diagnostics) when any clause cannot be mapped;
    partial models would be misleading.
    """
    pairs: list[tuple[Clause, Relation]] = []
    if approach == "dep-pos":
        clauses: list[Clause] = []
        for sent in req.sentences:
            clauses.extend(decompose_sentence(sent.text, sent.dep, lexicon))
        clauses, pronoun_warnings = preprocess.resolve_pronouns(
            clauses, lexicon, number_check=number_check)
        for warning in pronoun_warnings:
            diagnostics.warning(req.id, "unresolved-pronoun", warning)
        for clause in clauses:
            try:
                entities = extract_syntactic_entities(clause, dep_rules or DepRules.default())
                relation = entities_to_relation(
                    entities, lexicon, vocab, dep_rules, req.event_table)
            except (ExtractionError, ModelError) as err:
                diagnostics.error(req.id, "unmapped-clause", str(err))
                return None
            pairs.append((clause, relation))
    else:
        for sent in req.sentences:
            dropped: list[str] = []
            for clause in frames_to_clauses(sent.srl, lexicon, dropped):
                try:
                    relation, draft = frame_to_relation(
                        clause, req.event_table, lexicon, vocab, srl_rules)
                except (FrameError, ModelError) as err:
                    diagnostics.error(req.id, "unmapped-frame", str(err))
                    return None
                if draft.time_constraint:
                    diagnostics.warning(
                        req.id, "time-constraint-dropped",
                        f"time constraint {draft.time_constraint!r} captured "
                        f"but not modeled")
                for note in draft.notes:
                    diagnostics.info(req.id, "frame-note", note)
                pairs.append((clause, relation))
            for reason in dropped:
                diagnostics.info(req.id, "frame-dropped", reason)

    if not pairs:
        diagnostics.error(req.id, "empty-model", "no clauses survived extraction")
        return None
    try:
        return assemble_model(pairs)
    except ModelError as err:
        diagnostics.error(req.id, "structure-error", str(err))
        return None


@dataclass
class RunResult:
    models: dict[str, RequirementModel]
    rendered: dict[str, str]
    diagnostics: Diagnostics

    def ok(self, strict: bool = False) -> bool:
        if self.diagnostics.errors():
            return False
        return not (strict and self.diagnostics.warnings())


def run_formalize(config: RunConfig) -> RunResult:
    lexicon = (Lexicon.load(config.lexicon_path) if config.lexicon_path
               else Lexicon.default())
    dep_rules = srl_rules = None
    if config.rules_path:
        if config.approach == "dep-pos":
            dep_rules = DepRules.load(config.rules_path)
        else:
            srl_rules = SrlRules.load(config.rules_path)
    diagnostics = Diagnostics()
    vocab = BooleanVocabulary(lexicon.antonyms)
    models: dict[str, RequirementModel] = {}
    rendered: dict[str, str] = {}

    # requirements are processed sequentially in corpus order so the
    # boolean vocabulary registers qualifiers deterministically
    for req_id, raw_text in read_corpus(config.corpus_path):
        try:
            req = load_requirement(req_id, raw_text, config.annotations_dir,
                                   config.approach, lexicon, diagnostics)
        except (AnnotationError, ValueError) as err:
            diagnostics.error(req_id, "invalid-annotation", str(err))
            continue
        if req is None:
            continue
        model = formalize_requirement(
            req, config.approach, lexicon, vocab, diagnostics,
            dep_rules=dep_rules, srl_rules=srl_rules,
            number_check=config.number_check)
        if model is None:
            continue
        models[req_id] = model
        rendered[req_id] = render_pseudocode(model)

    if config.out_dir is not None:
        out = Path(config.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for req_id, text in rendered.items():
            (out / f"{req_id}.model.txt").write_text(text, "utf-8")
            (out / f"{req_id}.model.json").write_text(
                json.dumps(model_to_json(models[req_id]), indent=2) + "\n", "utf-8")
        if rendered or diagnostics.entries:
            (out / "diagnostics.json").write_text(
                json.dumps(diagnostics.to_json(), indent=2, sort_keys=True) + "\n",
                "utf-8")
    return RunResult(models, rendered, diagnostics)


@dataclass
class CheckOutcome:
    requirement: str
    passed: bool
    reason: str = ""


def run_check(config: RunConfig, expected_dir: Path) -> tuple[list[CheckOutcome], RunResult]:
    """Golden harness: formalize and compare against expected model files."""
    result = run_formalize(config)
    outcomes: list[CheckOutcome] = []
    for req_id, _ in read_corpus(config.corpus_path):
        expected_path = Path(expected_dir) / f"{req_id}.model.txt"
        if req_id not in result.rendered:
            outcomes.append(CheckOutcome(req_id, False, "no model emitted"))
            continue
        if not expected_path.exists():
            outcomes.append(CheckOutcome(
                req_id, False, f"expected file {expected_path.name} missing"))
            continue
        expected = expected_path.read_text("utf-8")
        try:
            same = canonical_equal(result.rendered[req_id], expected)
        except ValueError as err:
            outcomes.append(CheckOutcome(req_id, False, f"comparator error: {err}"))
            continue
        if same:
            outcomes.append(CheckOutcome(req_id, True))
        else:
            outcomes.append(CheckOutcome(req_id, False, "model differs from expected"))
    return outcomes, result
