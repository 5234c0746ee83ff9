"""Exact integers, rationals and the classical counting numbers.

Python ``int`` is already arbitrary precision and :class:`fractions.Fraction`
is always reduced with a positive denominator, so both are used directly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError, RemainderError

Integer = int
Rational = Fraction

__all__ = [
    "Integer",
    "Rational",
    "as_integer",
    "bell",
    "binomial",
    "catalan",
    "motzkin",
]


def binomial(n: int, k: int) -> int:
    """``n choose k``, and 0 whenever ``k`` falls outside ``0..n``."""
    if n < 0:
        raise DomainError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError(f"catalan: n must be nonnegative, got {n}")
    return comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    """Motzkin number as ``sum_i binom(n, 2i) * catalan(i)``."""
    if n < 0:
        raise DomainError(f"motzkin: n must be nonnegative, got {n}")
    return sum(binomial(n, 2 * i) * catalan(i) for i in range(n // 2 + 1))


@lru_cache(maxsize=None)
def _bell_row(n: int) -> tuple[int, ...]:
    # Row n of the Bell triangle; its first entry is B_n.
    if n == 0:
        return (1,)
    prev = _bell_row(n - 1)
    row = [prev[-1]]
    for x in prev:
        row.append(row[-1] + x)
    return tuple(row)


def bell(n: int) -> int:
    """Number of set partitions of an ``n``-element set."""
    if n < 0:
        raise DomainError(f"bell: n must be nonnegative, got {n}")
    # Build bottom-up so deep requests do not recurse past the stack limit.
    for m in range(0, n, 256):
        _bell_row(m)
    return _bell_row(n)[0]


def as_integer(value: int | Fraction, what: str = "value") -> int:
    """Return ``value`` as an ``int``, raising if it is not integral."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise RemainderError(f"{what} is not an integer: {value}")
    return value.numerator
