import pytest

import corpus


@pytest.fixture(scope="session")
def star22_corpus():
    return corpus.star22_corpus()


@pytest.fixture(scope="session")
def sat22_corpus():
    return corpus.sat22_corpus()


@pytest.fixture(scope="session")
def nae_corpus():
    return corpus.nae_corpus()


@pytest.fixture(scope="session")
def qbf_1122_corpus():
    return corpus.qbf_1122_corpus()


@pytest.fixture(scope="session")
def qbf_2222_corpus():
    return corpus.qbf_2222_corpus()
