import numpy as np
import pytest

from tanglekit.qstate import make_pure


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def basis_sum(*bits):
    n = len(bits[0])
    v = np.zeros(2**n, dtype=complex)
    for b in bits:
        v[int(b, 2)] = 1
    return make_pure(v, n)


@pytest.fixture
def ghz3():
    return basis_sum("000", "111")


@pytest.fixture
def w3():
    return basis_sum("001", "010", "100")


@pytest.fixture
def ghz4():
    return basis_sum("0000", "1111")
