from fractions import Fraction

import pytest

from invseq.errors import DomainError, RemainderError
from invseq.exactnum import as_integer, bell, binomial, catalan, motzkin
from invseq.partitions import enumerate_partitions


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert all(binomial(n, 0) == 1 for n in range(10))
    assert binomial(5, -1) == 0
    assert binomial(5, 7) == 0


def test_binomial_negative_n():
    with pytest.raises(DomainError):
        binomial(-1, 0)


@pytest.mark.parametrize("n", range(0, 25))
def test_binomial_symmetry_and_pascal(n):
    for k in range(n + 1):
        assert binomial(n, k) == binomial(n, n - k)
        if n >= 1:
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_catalan():
    assert catalan(0) == 1
    assert catalan(3) == 5
    assert [catalan(n) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]
    for n in range(40):
        assert catalan(n) * (n + 1) == binomial(2 * n, n)


def test_motzkin():
    assert motzkin(0) == 1
    assert motzkin(3) == 4
    assert motzkin(4) == 9
    assert [motzkin(n) for n in range(9)] == [1, 1, 2, 4, 9, 21, 51, 127, 323]


def test_bell():
    assert bell(0) == 1
    assert bell(3) == 5
    assert bell(5) == 52
    for n in range(1, 11):
        assert bell(n) == sum(1 for _ in enumerate_partitions(n))


def test_as_integer():
    assert as_integer(Fraction(6, 3)) == 2
    assert as_integer(7) == 7
    with pytest.raises(RemainderError):
        as_integer(Fraction(1, 2))
