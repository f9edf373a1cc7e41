from pathlib import Path

import pytest

from cubic2ec import Certifier, builtin, parse_graph6

DATA = Path(__file__).resolve().parent.parent / "data"
CORPUS_PATH = DATA / "cubic_3ec_n4_14.g6"


@pytest.fixture(scope="session")
def k4():
    return builtin("k4")


@pytest.fixture(scope="session")
def k33():
    return builtin("k33")


@pytest.fixture(scope="session")
def prism():
    return builtin("prism")


@pytest.fixture(scope="session")
def petersen():
    return builtin("petersen")


@pytest.fixture(scope="session")
def corpus_lines():
    return [
        ln.strip()
        for ln in CORPUS_PATH.read_text().splitlines()
        if ln.strip()
    ]


@pytest.fixture(scope="session")
def corpus(corpus_lines):
    return [parse_graph6(ln) for ln in corpus_lines]


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [g for g in corpus if g.n <= 10]


@pytest.fixture(scope="session")
def certifier():
    return Certifier()
