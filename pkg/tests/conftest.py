from functools import lru_cache

import pytest

from boolrep.corpus import corpus_names, load_corpus
from boolrep.irreducibles import all_irreducibles
from boolrep.semigroup import green_structure

CORPUS = corpus_names()
SMALL = [n for n in CORPUS if load_corpus(n).order <= 7]


@lru_cache(maxsize=None)
def structure(name):
    S = load_corpus(name)
    return S, green_structure(S)


@lru_cache(maxsize=None)
def irreducibles_of(name):
    S, G = structure(name)
    return all_irreducibles(S, G)


def all_partitions(n):
    def rec(i, cur, k):
        if i == n:
            yield tuple(cur)
            return
        for c in range(k + 1):
            cur.append(c)
            yield from rec(i + 1, cur, max(k, c + 1))
            cur.pop()

    yield from rec(0, [], 0)


@pytest.fixture(params=CORPUS)
def fixture_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
