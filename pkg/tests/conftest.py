import pytest

from ehrpoly import polygon_corpus, scott_pip_search

CORPUS_SEED = 20240808


@pytest.fixture(scope="session")
def corpus200():
    """The shared 200-polygon random corpus: coordinate denominators <= 6,
    coordinates in [-5, 5]."""
    return polygon_corpus(CORPUS_SEED, 200, max_denominator=6, coord_bound=5)


@pytest.fixture(scope="session")
def search1000():
    """The shared seeded 1000-trial search report."""
    return scott_pip_search(seed=1, trials=1000, max_denominator=4, coord_bound=4)
