import pytest

from periodic_products import FactorFamily, cyclic, symmetric


@pytest.fixture(scope="session")
def z3z3():
    return FactorFamily([cyclic(3), cyclic(3, gen="b")], 665)


@pytest.fixture(scope="session")
def z3z5():
    return FactorFamily([cyclic(3), cyclic(5, gen="b")], 665)


@pytest.fixture(scope="session")
def z3z2():
    return FactorFamily([cyclic(3), cyclic(2, gen="b")], 665)


@pytest.fixture(scope="session")
def z2s3():
    return FactorFamily([cyclic(2, gen="b"), symmetric(3)], 665)


@pytest.fixture(scope="session")
def z2z6():
    return FactorFamily([cyclic(2, gen="b"), cyclic(6)], 665)
