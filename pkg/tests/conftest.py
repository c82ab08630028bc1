import pytest

from blockperm import BlockSpec, parse_ornament, parse_permutation

from refdata import BLOCKS18, DESCENDING18, ORN18_TEXT, PERM18_TEXT


@pytest.fixture
def perm18():
    return parse_permutation(PERM18_TEXT)


@pytest.fixture
def blocks18():
    return BlockSpec(BLOCKS18, DESCENDING18)


@pytest.fixture
def orn18():
    return parse_ornament(ORN18_TEXT)
