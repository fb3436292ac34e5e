import pytest

from su3q.braiding import Braiding
from su3q.cli import data_file
from su3q.field import SYMBOLIC, random_modular
from su3q.submodule import build_M
from su3q.tangle import load_tangle


@pytest.fixture(scope="session")
def sym():
    """Symbolic braiding with M registered, plus the submodule data."""
    B = Braiding(SYMBOLIC)
    data = build_M(B)
    return B, data


@pytest.fixture(scope="session")
def modular():
    B = Braiding(random_modular(11))
    data = build_M(B)
    return B, data


@pytest.fixture(scope="session")
def conway_tangles():
    return load_tangle(data_file("tangle_F.txt")), load_tangle(data_file("tangle_G.txt"))
