import json

import pytest

from reqformal.annotations import (
    AnnotatedRequirement, AnnotationError, ConlluParseError, DepAnnotation,
    SentenceAnnotation, SrlArgument, SrlFrame, SrlSentence, SrlValidationError,
    Token, parse_conllu, parse_srl_json, render_conllu, render_srl_json,
)

MINIMAL = "1\tStop\tstop\tVERB\t_\t_\t0\troot\t_\t_\n"


def test_minimal_root_only_tree():
    sentences = parse_conllu(MINIMAL)
    assert len(sentences) == 1
    (token,) = sentences[0].tokens
    assert token.dep == "root" and token.head == 0 and token.text == "Stop"


def test_fig_example_tags_preserved(dep_annotations):
    (sentence,) = dep_annotations["r1"]
    by_text = {t.text: t for t in sentence.tokens}
    assert by_text["temperature"].dep == "nsubj"
    assert by_text["t_batt_max"].dep == "pobj"
    assert by_text["larger"].pos == "ADJ"
    root = sentence.token(sentence.root_index())
    assert root.text == "is"


@pytest.mark.parametrize("req_id", ["r1", "r2", "r3", "r4", "r5", "r6", "r9"])
def test_fixture_files_have_one_root_tree(dep_annotations, req_id):
    for sentence in dep_annotations[req_id]:
        sentence.validate()  # does not raise
        roots = [t for t in sentence.tokens if t.head == 0]
        assert len(roots) == 1


def test_parse_error_reports_line_number():
    with pytest.raises(ConlluParseError, match="line 2"):
        parse_conllu(MINIMAL + "bad line without tabs\n")


def test_head_out_of_range_names_sentence():
    bad = "1\tStop\tstop\tVERB\t_\t_\t9\troot\t_\t_\n"
    with pytest.raises(AnnotationError, match="sentence 1"):
        parse_conllu(bad)


def test_cyclic_heads_rejected():
    bad = ("1\ta\ta\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
           "2\tb\tb\tNOUN\t_\t_\t1\tconj\t_\t_\n")
    with pytest.raises(AnnotationError):
        parse_conllu(bad)


def test_two_roots_rejected():
    bad = ("1\ta\ta\tVERB\t_\t_\t0\troot\t_\t_\n"
           "2\tb\tb\tVERB\t_\t_\t0\troot\t_\t_\n")
    with pytest.raises(AnnotationError, match="exactly one root"):
        parse_conllu(bad)


def test_unknown_tags_rejected():
    bad_pos = "1\tStop\tstop\tVRB\t_\t_\t0\troot\t_\t_\n"
    with pytest.raises(AnnotationError, match="POS"):
        parse_conllu(bad_pos)
    bad_dep = "1\tStop\tstop\tVERB\t_\t_\t0\tROOT_X\t_\t_\n"
    with pytest.raises(AnnotationError, match="dependency"):
        parse_conllu(bad_dep)


def test_conllu_round_trip(dep_annotations):
    for sentences in dep_annotations.values():
        assert parse_conllu(render_conllu(sentences)) == sentences


def test_multiword_ranges_and_empty_nodes_skipped():
    content = ("1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
               "1\tdo\tdo\tAUX\t_\t_\t2\taux\t_\t_\n"
               "2\tstop\tstop\tVERB\t_\t_\t0\troot\t_\t_\n"
               "2.1\tghost\tghost\tNOUN\t_\t_\t_\t_\t_\t_\n")
    (sentence,) = parse_conllu(content)
    assert [t.text for t in sentence.tokens] == ["do", "stop"]


def test_srl_fig_example():
    content = json.dumps({"sentences": [{
        "text": "The system shall close the valve .",
        "tokens": ["The", "system", "shall", "close", "the", "valve", "."],
        "frames": [{
            "verb": {"index": 4, "text": "close", "lemma": "close"},
            "arguments": [
                {"label": "ARG0", "start": 1, "end": 2, "text": "The system"},
                {"label": "ARG1", "start": 5, "end": 6, "text": "the valve"},
            ],
        }],
    }]})
    (sentence,) = parse_srl_json(content)
    (frame,) = sentence.frames
    assert frame.verb_text == "close"
    assert frame.argument("ARG0").text == "The system"
    assert frame.argument("ARG1").text == "the valve"


def test_srl_requirement_fixture_frames(srl_annotations):
    (sentence,) = srl_annotations["r7"]
    surviving = [f for f in sentence.frames if len(f.arguments) >= 2]
    assert [f.verb_text for f in surviving] == ["limited", "indicated", "exceeds"]
    limited = surviving[0]
    assert limited.argument("ARG1").text == "The maximum power"
    assert limited.argument("ARG2").text == "to G_Max"
    assert limited.argument("ARGM-TMP").text.startswith("when the device")
    exceeds = surviving[2]
    assert exceeds.argument("ARG0").text == "the device temperature"
    assert exceeds.argument("ARGM-TMP").text == "when"


def test_srl_empty_frame_list():
    content = json.dumps({"sentences": [
        {"text": "x", "tokens": ["x"], "frames": []}]})
    (sentence,) = parse_srl_json(content)
    assert sentence.frames == ()


def test_srl_unknown_label_rejected():
    content = json.dumps({"sentences": [{
        "text": "a b", "tokens": ["a", "b"],
        "frames": [{"verb": {"index": 1, "text": "a", "lemma": "a"},
                    "arguments": [{"label": "ARG9", "start": 2, "end": 2,
                                   "text": "b"}]}],
    }]})
    with pytest.raises(SrlValidationError, match="unknown label"):
        parse_srl_json(content)


def test_srl_overlapping_spans_rejected():
    content = json.dumps({"sentences": [{
        "text": "a b c", "tokens": ["a", "b", "c"],
        "frames": [{"verb": {"index": 1, "text": "a", "lemma": "a"},
                    "arguments": [
                        {"label": "ARG0", "start": 2, "end": 3, "text": "b c"},
                        {"label": "ARG1", "start": 3, "end": 3, "text": "c"},
                    ]}],
    }]})
    with pytest.raises(SrlValidationError, match="overlaps"):
        parse_srl_json(content)


def test_srl_round_trip(srl_annotations):
    for sentences in srl_annotations.values():
        assert parse_srl_json(render_srl_json(sentences)) == sentences


def test_srl_fixtures_validate_against_schema(fixtures):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(
        (fixtures.parent.parent / "docs" / "srl.schema.json").read_text("utf-8"))
    for path in (fixtures / "annotations").glob("*.srl.json"):
        jsonschema.validate(json.loads(path.read_text("utf-8")), schema)


def test_annotated_requirement_alignment():
    dep = parse_conllu(MINIMAL)[0]
    req = AnnotatedRequirement(
        id="x", raw_text="Stop", preprocessed_text="Stop",
        sentences=[SentenceAnnotation(text="Stop", dep=dep)])
    req.validate()
    bad = AnnotatedRequirement(
        id="x", raw_text="Halt", preprocessed_text="Halt",
        sentences=[SentenceAnnotation(text="Halt", dep=dep)])
    with pytest.raises(AnnotationError, match="do not"):
        bad.validate()


def test_event_abbreviation_must_appear_in_text():
    req = AnnotatedRequirement(
        id="x", raw_text="t", preprocessed_text="no marker here",
        event_table={"E1": "Some event"})
    with pytest.raises(AnnotationError, match="E1"):
        req.validate()
