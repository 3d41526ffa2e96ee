import pytest

from hfhash.core import default_params
from hfhash.evaluator import compile_system
from hfhash.system import load_default_system


@pytest.fixture(scope="session")
def system():
    return load_default_system()


@pytest.fixture(scope="session")
def compiled(system):
    return compile_system(system)


@pytest.fixture(scope="session")
def params():
    # compiled once per session; hash tests share it
    return default_params()
