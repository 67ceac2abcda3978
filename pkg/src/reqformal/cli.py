"""Command line interface: formalize a corpus, check against golden
models, or shell out to an annotator for fresh annotation files."""

from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

import click

from .pipeline import RunConfig, run_check, run_formalize

ANNOTATOR_ENV = "REQFORMAL_ANNOTATOR"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_FATAL = 2


def _common_config(approach, corpus, annotations, out, lexicon, rules,
                   strict, number_check) -> RunConfig:
    corpus = Path(corpus)
    annotations_dir = Path(annotations) if annotations else corpus.parent
    try:
        return RunConfig(
            approach=approach,
            corpus_path=corpus,
            annotations_dir=annotations_dir,
            out_dir=Path(out) if out else None,
            lexicon_path=Path(lexicon) if lexicon else None,
            rules_path=Path(rules) if rules else None,
            strict=strict,
            number_check=number_check,
        )
    except ValueError as err:
        raise click.ClickException(str(err))


def _print_diagnostics(result) -> None:
    for d in result.diagnostics.entries:
        if d.severity == "info":
            continue
        click.echo(f"{d.severity}: [{d.requirement}] {d.code}: {d.message}", err=True)


@click.group()
def main():
    """Turn natural-language requirements into pseudocode models."""


approach_option = click.option(
    "--approach", type=click.Choice(["dep-pos", "srl"]), required=True,
    help="Which annotation route to use.")
annotations_option = click.option(
    "--annotations", type=click.Path(exists=True, file_okay=False),
    help="Directory with <id>.conllu / <id>.srl.json files "
         "(default: next to the corpus).")
lexicon_option = click.option(
    "--lexicon", type=click.Path(exists=True, dir_okay=False),
    help="Alternative lexicon file.")
rules_option = click.option(
    "--rules", type=click.Path(exists=True, dir_okay=False),
    help="Alternative rule file for the chosen approach.")


@main.command()
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False))
@approach_option
@annotations_option
@lexicon_option
@rules_option
@click.option("--out", type=click.Path(file_okay=False), required=True,
              help="Output directory for model and diagnostics files.")
@click.option("--strict", is_flag=True, help="Treat warnings as failures.")
@click.option("--number-check", is_flag=True,
              help="Require grammatical-number agreement in pronoun resolution.")
def formalize(corpus, approach, annotations, lexicon, rules, out, strict,
              number_check):
    """Formalize every requirement in CORPUS."""
    config = _common_config(approach, corpus, annotations, out, lexicon, rules,
                            strict, number_check)
    try:
        result = run_formalize(config)
    except (OSError, ValueError) as err:
        click.echo(f"fatal: {err}", err=True)
        sys.exit(EXIT_FATAL)
    _print_diagnostics(result)
    click.echo(f"{len(result.rendered)} model(s) written to {out}")
    sys.exit(EXIT_OK if result.ok(strict=strict) else EXIT_CHECK_FAILED)


@main.command()
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False))
@approach_option
@annotations_option
@lexicon_option
@rules_option
@click.option("--expected", type=click.Path(exists=True, file_okay=False),
              required=True, help="Directory with expected <id>.model.txt files.")
@click.option("--out", type=click.Path(file_okay=False),
              help="Also write the emitted models here.")
@click.option("--strict", is_flag=True, help="Treat warnings as failures.")
@click.option("--number-check", is_flag=True)
def check(corpus, approach, annotations, lexicon, rules, expected, out, strict,
          number_check):
    """Compare emitted models against golden files in --expected."""
    config = _common_config(approach, corpus, annotations, out, lexicon, rules,
                            strict, number_check)
    try:
        outcomes, result = run_check(config, Path(expected))
    except (OSError, ValueError) as err:
        click.echo(f"fatal: {err}", err=True)
        sys.exit(EXIT_FATAL)
    _print_diagnostics(result)
    passed = 0
    for outcome in outcomes:
        if outcome.passed:
            passed += 1
            click.echo(f"PASS {outcome.requirement}")
        else:
            click.echo(f"FAIL {outcome.requirement}: {outcome.reason}")
    click.echo(f"{passed}/{len(outcomes)} requirement(s) match")
    all_ok = passed == len(outcomes) and result.ok(strict=strict)
    sys.exit(EXIT_OK if all_ok else EXIT_CHECK_FAILED)


@main.command()
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(["dep-pos", "srl", "both"]),
              default="both", show_default=True)
@click.option("--out", type=click.Path(file_okay=False), required=True,
              help="Directory for the generated annotation files.")
@lexicon_option
def annotate(corpus, mode, out, lexicon):
    """Produce annotation files by invoking the external annotator.

    The annotator executable is taken from $REQFORMAL_ANNOTATOR. The
    corpus is preprocessed first so that the annotations line up with
    the text the engine extracts from.
    """
    from .lexicon import Lexicon
    from .pipeline import Diagnostics, prepare_requirement, read_corpus

    annotator = os.environ.get(ANNOTATOR_ENV)
    if not annotator:
        click.echo(
            f"No annotator configured. Set {ANNOTATOR_ENV} to the annotator "
            "executable, or produce <id>.conllu / <id>.srl.json files with a "
            "tool of your choice (formats documented in the README).", err=True)
        sys.exit(EXIT_FATAL)

    lex = Lexicon.load(lexicon) if lexicon else Lexicon.default()
    diagnostics = Diagnostics()
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    blocks = []
    for req_id, raw in read_corpus(Path(corpus)):
        text, _ = prepare_requirement(req_id, raw, lex, diagnostics)
        blocks.append(f"# {req_id}\n{text}")
    prepared = out_dir / "preprocessed.txt"
    prepared.write_text("\n\n".join(blocks) + "\n", "utf-8")

    cmd = [annotator, "--mode", mode, "--in", str(prepared), "--out", str(out_dir)]
    proc = subprocess.run(cmd)
    sys.exit(proc.returncode)


if __name__ == "__main__":
    main()
