import pytest

from ringspectra.oracle import corpus


@pytest.fixture(scope="session")
def algebra_corpus():
    return corpus()


@pytest.fixture(scope="session")
def corpus_by_name(algebra_corpus):
    return dict(algebra_corpus)


@pytest.fixture(scope="session")
def small_f2_corpus(algebra_corpus):
    """The F_2 fixtures with dim <= 4: the exhaustive-oracle arena."""
    return [(n, a) for n, a in algebra_corpus
            if a.field.is_finite() and a.field.p == 2 and a.dim <= 4]
