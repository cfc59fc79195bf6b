import pytest

from a2cent import load_named


@pytest.fixture(scope="session")
def c1():
    return load_named("c1")
