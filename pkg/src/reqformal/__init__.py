"""reqformal: rule-based formalization of natural-language requirements
into pseudocode requirement models."""

from .annotations import (
    AnnotatedRequirement, DepAnnotation, SrlArgument, SrlFrame, SrlSentence,
    Token, parse_conllu, parse_srl_json, render_conllu, render_srl_json,
)
from .decompose import Clause, frames_to_clauses, rewrite_between
from .dsl import canonical_equal, parse_pseudocode, render_pseudocode
from .lexicon import BooleanVocabulary, Lexicon, classify_boolean, lookup_operator
from .model import (
    BoolOp, Relation, RequirementModel, assemble_model, normalize_identifier,
)
from .pipeline import RunConfig, run_check, run_formalize

__version__ = "0.1.0"

__all__ = [
    "AnnotatedRequirement", "BoolOp", "BooleanVocabulary", "Clause",
    "DepAnnotation", "Lexicon", "Relation", "RequirementModel", "RunConfig",
    "SrlArgument", "SrlFrame", "SrlSentence", "Token", "assemble_model",
    "canonical_equal", "classify_boolean", "frames_to_clauses",
    "lookup_operator", "normalize_identifier", "parse_conllu",
    "parse_pseudocode", "parse_srl_json", "render_conllu", "render_pseudocode",
    "render_srl_json", "rewrite_between", "run_check", "run_formalize",
]
