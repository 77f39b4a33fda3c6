import pytest

from kal1 import niederreiter, scheme
from kal1.goppa import CodeParams, generate_code
from kal1.rng import SeededRng

TOY = CodeParams(16, 8, 2, 4)
MID = CodeParams(256, 192, 8, 8)


def seed_bytes(tag: int) -> bytes:
    return tag.to_bytes(16, "big")


@pytest.fixture(scope="session")
def toy_code():
    return generate_code(TOY, SeededRng(seed_bytes(1)))


@pytest.fixture(scope="session")
def toy_nied():
    return niederreiter.keygen(TOY, SeededRng(seed_bytes(1)))


@pytest.fixture(scope="session")
def toy_kal1():
    return scheme.keygen(TOY, scheme.DenseSeed(), SeededRng(seed_bytes(7)))


@pytest.fixture(scope="session")
def mid_kal1():
    return scheme.keygen(MID, scheme.DenseSeed(), SeededRng(seed_bytes(0x11)))
