import numpy as np
import pytest

from skewpbw import finite_rings as fr
from skewpbw.fixtures import fixture


def m2_z2():
    """Full 2x2 matrix ring over Z/2; its nilpotents do not form an ideal."""
    mats = [np.array([[a, b], [c, d]]) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)]
    idx = {tuple(m.ravel()): i for i, m in enumerate(mats)}
    add = [[idx[tuple(((x + y) % 2).ravel())] for y in mats] for x in mats]
    mul = [[idx[tuple(((x @ y) % 2).ravel())] for y in mats] for x in mats]
    return fr.table_ring(add, mul, idx[(0, 0, 0, 0)], idx[(1, 0, 0, 1)])


@pytest.fixture(scope="session")
def z4():
    return fixture("zmod4")


@pytest.fixture(scope="session")
def ut():
    return fixture("ut2")


@pytest.fixture(scope="session")
def s2x():
    return fixture("s2")


@pytest.fixture(scope="session")
def m2():
    return m2_z2()
