import pytest

from divkit import make_distribution


@pytest.fixture
def bern_pair():
    """The worked two-atom fixture used throughout the examples."""
    return make_distribution([0.7, 0.3]), make_distribution([0.5, 0.5])


@pytest.fixture
def trinomial_pair():
    return make_distribution([0.2, 0.3, 0.5]), make_distribution([1, 1, 1])
