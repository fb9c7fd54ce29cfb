import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")


@pytest.fixture(scope="session")
def a2():
    from coxkit import corpus
    return corpus.load("a2")


@pytest.fixture(scope="session")
def b2():
    from coxkit import corpus
    return corpus.load("b2")


@pytest.fixture(scope="session")
def a3():
    from coxkit import corpus
    return corpus.load("a3")


@pytest.fixture(scope="session")
def b3():
    from coxkit import corpus
    return corpus.load("b3")


@pytest.fixture(scope="session")
def dinf():
    from coxkit import corpus
    return corpus.load("dihedral_inf")
