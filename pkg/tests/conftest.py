import pathlib

import pytest

from reqformal.annotations import parse_conllu, parse_srl_json
from reqformal.lexicon import BooleanVocabulary, Lexicon

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures():
    return FIXTURES


@pytest.fixture(scope="session")
def lexicon():
    return Lexicon.default()


@pytest.fixture
def vocab(lexicon):
    return BooleanVocabulary(lexicon.antonyms)


@pytest.fixture(scope="session")
def dep_annotations():
    loaded = {}
    for path in (FIXTURES / "annotations").glob("*.conllu"):
        loaded[path.stem] = parse_conllu(path.read_text("utf-8"))
    return loaded


@pytest.fixture(scope="session")
def srl_annotations():
    loaded = {}
    for path in (FIXTURES / "annotations").glob("*.srl.json"):
        loaded[path.name.split(".")[0]] = parse_srl_json(path.read_text("utf-8"))
    return loaded
