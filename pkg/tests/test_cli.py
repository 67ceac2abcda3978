import os
import stat

import pytest
from click.testing import CliRunner

from reqformal.cli import ANNOTATOR_ENV, main


@pytest.fixture
def runner():
    return CliRunner()


def _dep_args(fixtures, *extra):
    return [
        str(fixtures / "corpus" / "dep_pos.txt"),
        "--approach", "dep-pos",
        "--annotations", str(fixtures / "annotations"),
        *extra,
    ]


class TestFormalize:
    def test_writes_models_and_exits_zero(self, runner, fixtures, tmp_path):
        out = tmp_path / "out"
        result = runner.invoke(
            main, ["formalize", *_dep_args(fixtures, "--out", str(out))])
        assert result.exit_code == 0, result.output
        assert (out / "r1.model.txt").exists()
        assert "6 model(s)" in result.output

    def test_strict_turns_warnings_into_failure(self, runner, fixtures, tmp_path):
        # the between-rewrite of r4 always warns
        result = runner.invoke(
            main, ["formalize", *_dep_args(fixtures, "--out", str(tmp_path / "o"),
                                           "--strict")])
        assert result.exit_code == 1

    def test_empty_corpus_ok(self, runner, fixtures, tmp_path):
        corpus = tmp_path / "empty.txt"
        corpus.write_text("")
        out = tmp_path / "out"
        result = runner.invoke(main, [
            "formalize", str(corpus), "--approach", "srl",
            "--annotations", str(fixtures / "annotations"), "--out", str(out)])
        assert result.exit_code == 0
        assert "0 model(s)" in result.output

    def test_missing_annotation_exit_one(self, runner, fixtures, tmp_path):
        corpus = tmp_path / "corpus.txt"
        corpus.write_text("# nowhere\nThe valve shall close.\n")
        result = runner.invoke(main, [
            "formalize", str(corpus), "--approach", "dep-pos",
            "--annotations", str(fixtures / "annotations"),
            "--out", str(tmp_path / "out")])
        assert result.exit_code == 1
        assert "missing-annotation" in result.output


class TestCheck:
    def test_all_pass(self, runner, fixtures):
        result = runner.invoke(main, [
            "check", *_dep_args(fixtures),
            "--expected", str(fixtures / "expected" / "dep-pos")])
        assert result.exit_code == 0, result.output
        assert result.output.count("PASS") == 6
        assert "6/6" in result.output

    def test_srl_all_pass(self, runner, fixtures):
        result = runner.invoke(main, [
            "check", str(fixtures / "corpus" / "srl.txt"), "--approach", "srl",
            "--annotations", str(fixtures / "annotations"),
            "--expected", str(fixtures / "expected" / "srl")])
        assert result.exit_code == 0, result.output
        assert "7/7" in result.output

    def test_mismatch_fails_naming_requirement(self, runner, fixtures, tmp_path):
        expected = tmp_path / "expected"
        expected.mkdir()
        for path in (fixtures / "expected" / "dep-pos").glob("*.model.txt"):
            expected.joinpath(path.name).write_text(path.read_text("utf-8"), "utf-8")
        (expected / "r2.model.txt").write_text(
            "if( temperature_of_battery() > t_batt_max\n"
            "    and temperature_of_battery() > t_max )\n"
            "    then( set_error_state(E_BROKEN) )\n", "utf-8")
        result = runner.invoke(main, [
            "check", *_dep_args(fixtures), "--expected", str(expected)])
        assert result.exit_code == 1
        assert "FAIL r2" in result.output
        assert "5/6" in result.output

    def test_empty_corpus_vacuous_pass(self, runner, fixtures, tmp_path):
        corpus = tmp_path / "empty.txt"
        corpus.write_text("")
        expected = tmp_path / "expected"
        expected.mkdir()
        result = runner.invoke(main, [
            "check", str(corpus), "--approach", "dep-pos",
            "--annotations", str(fixtures / "annotations"),
            "--expected", str(expected)])
        assert result.exit_code == 0
        assert "0/0" in result.output


class TestAnnotate:
    def test_without_annotator_exits_fatal(self, runner, fixtures, monkeypatch):
        monkeypatch.delenv(ANNOTATOR_ENV, raising=False)
        result = runner.invoke(main, [
            "annotate", str(fixtures / "corpus" / "srl.txt"),
            "--out", "unused-dir"])
        assert result.exit_code == 2
        assert ANNOTATOR_ENV in result.output

    def test_invokes_configured_annotator_on_preprocessed_text(
            self, runner, fixtures, tmp_path, monkeypatch):
        script = tmp_path / "fake-annotator.sh"
        script.write_text("#!/bin/sh\necho \"$@\" > \"%s/args.txt\"\n" % tmp_path)
        script.chmod(script.stat().st_mode | stat.S_IEXEC)
        monkeypatch.setenv(ANNOTATOR_ENV, str(script))
        out = tmp_path / "out"
        result = runner.invoke(main, [
            "annotate", str(fixtures / "corpus" / "srl.txt"),
            "--mode", "srl", "--out", str(out)])
        assert result.exit_code == 0, result.output
        args = (tmp_path / "args.txt").read_text()
        assert "--mode srl" in args
        prepared = (out / "preprocessed.txt").read_text("utf-8")
        assert "E1" in prepared and '"High device temperature"' not in prepared
        assert "[G_Max]" not in prepared and "G_Max" in prepared
