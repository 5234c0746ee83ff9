"""P-recursive sequences, closed forms and identity checks in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence as Seq

from .errors import DomainError, RemainderError, VerificationError
from .exactnum import as_integer, binomial, catalan, motzkin
from .partitions import count_crossing_avoiders
from .report import Check

__all__ = [
    "E3_RECURRENCE",
    "ENUMERATION_RECURRENCE",
    "PRecurrence",
    "Sequence",
    "binomial_transform",
    "c3_sequence",
    "compose_operator",
    "e3_sequence",
    "e_closed_form",
    "e_closed_form_lagrange",
    "e_closed_form_sum",
    "extend",
    "lagrange_coeff",
    "verify_c3_identity",
    "verify_kimlin",
    "verify_motzkin_identity",
    "verify_operator_identity",
]

# Polynomials in n: tuples of integer coefficients, constant term first.
NPoly = tuple[int, ...]


def npoly(*factors: Seq[int], scale: int = 1) -> NPoly:
    """Product of ``scale`` and the given coefficient lists."""
    out: list[int] = [scale]
    for f in factors:
        res = [0] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                res[i + j] += a * b
        out = res
    return _trim(out)


def _trim(coeffs: Seq[int]) -> NPoly:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def npoly_eval(p: NPoly, n: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * n + c
    return acc


def npoly_add(a: NPoly, b: NPoly) -> NPoly:
    size = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)])


def npoly_shift(p: NPoly, k: int = 1) -> NPoly:
    """``p(n + k)``."""
    out: NPoly = (0,)
    power: NPoly = (1,)
    for c in p:
        out = npoly_add(out, npoly(power, scale=c))
        power = npoly(power, (k, 1))
    return out


def npoly_degree(p: NPoly) -> int:
    return -1 if p == (0,) else len(p) - 1


@dataclass(frozen=True)
class PRecurrence:
    """``sum_j coeffs[j](n) * a(n + j) = 0`` for ``n >= offset``.

    ``initial`` holds ``a(offset) .. a(offset + order - 1)``.
    """

    coeffs: tuple[NPoly, ...]
    offset: int
    initial: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if len(self.initial) != self.order:
            raise DomainError(
                f"order {self.order} recurrence needs {self.order} initial values, "
                f"got {len(self.initial)}"
            )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class Sequence:
    """Values ``a(offset), a(offset + 1), ...``."""

    offset: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        i = n - self.offset
        if not 0 <= i < len(self.values):
            raise IndexError(f"index {n} outside {self.offset}..{self.last}")
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def last(self) -> int:
        return self.offset + len(self.values) - 1

    def window(self, start: int, stop: int) -> list[int]:
        """``a(start) .. a(stop)`` inclusive."""
        return [self[n] for n in range(start, stop + 1)]


def extend(rec: PRecurrence, n_max: int) -> Sequence:
    """Evaluate the recurrence up to ``a(n_max)``, asserting exact division."""
    r = rec.order
    if n_max < rec.offset + r - 1:
        raise DomainError(f"n_max={n_max} is below the initial values of {rec.name or 'rec'}")
    vals = list(rec.initial)
    for n in range(rec.offset, n_max - r + 1):
        lead = npoly_eval(rec.coeffs[r], n)
        if lead == 0:
            raise ZeroDivisionError(f"leading coefficient vanishes at n={n}")
        acc = sum(npoly_eval(rec.coeffs[j], n) * vals[n - rec.offset + j] for j in range(r))
        q, rem = divmod(-acc, lead)
        if rem:
            raise RemainderError(
                f"{rec.name or 'recurrence'}: inexact step at n={n} ({-acc}/{lead})"
            )
        vals.append(q)
    return Sequence(rec.offset, tuple(vals[: n_max - rec.offset + 1]))


# 8(n+3)(n+1) a(n) + (7n^2+53n+88) a(n+1) - (n+8)(n+7) a(n+2) = 0, n >= 0.
E3_RECURRENCE = PRecurrence(
    coeffs=(
        npoly((3, 1), (1, 1), scale=8),
        (88, 53, 7),
        npoly((8, 1), (7, 1), scale=-1),
    ),
    offset=0,
    initial=(1, 1),
    name="three-term E3",
)

# Four-term recurrence produced by creative telescoping on the closed form.
# The cubic factor of the third coefficient is 3n^3 + 38n^2 + 156n + 212.
_A = npoly((13, 3), (3, 1), (2, 1), (1, 1), scale=8)
_B = npoly((3, 1), (2, 1), (376, 153, 15), scale=3)
_C = npoly((7, 1), (212, 156, 38, 3), scale=6)
_D = npoly((10, 3), (9, 1), (8, 1), (7, 1))
ENUMERATION_RECURRENCE = PRecurrence(
    coeffs=(_A, _B, _C, npoly(_D, scale=-1)),
    offset=1,
    initial=(1, 2, 5),
    name="four-term E",
)


@lru_cache(maxsize=None)
def _e3_cached(n_max: int) -> Sequence:
    return extend(E3_RECURRENCE, n_max)


def e3_sequence(n_max: int) -> Sequence:
    """``E_3(0..n_max)`` (at least two terms) from the three-term recurrence."""
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    return _e3_cached(max(n_max, 1))


def binomial_transform(seq: Sequence) -> Sequence:
    """``b_n = sum_{i<=n} binom(n, i) a_i`` for a sequence starting at 0."""
    if seq.offset != 0:
        raise DomainError("binomial_transform needs a sequence starting at index 0")
    a = seq.values
    return Sequence(0, tuple(sum(binomial(n, i) * a[i] for i in range(n + 1)) for n in range(len(a))))


def c3_sequence(n_max: int) -> Sequence:
    """``C_3(1..n_max)`` as the binomial transform of ``E_3`` shifted by one."""
    if n_max < 1:
        raise DomainError("c3_sequence needs n_max >= 1")
    b = binomial_transform(e3_sequence(n_max - 1))
    return Sequence(1, b.values)


def lagrange_coeff(k: int, m: int, n: int) -> int:
    """``[x^m t^n] Y^k = (k/n) sum_i binom(n,i) binom(n,k+i) binom(n,m+i)``."""
    if k < 1 or n < 1:
        raise DomainError(f"lagrange_coeff needs k, n >= 1, got k={k}, n={n}")
    total = sum(
        binomial(n, i) * binomial(n, k + i) * binomial(n, m + i)
        for i in range(0, n - k + 1)
    )
    return as_integer(Fraction(k * total, n), f"[x^{m} t^{n}] Y^{k}")


# (sign, m, k) for the twelve coefficients summed into E(n).
EXTRACTION_TERMS = (
    (1, -1, 1), (1, 0, 1), (-1, 5, 1), (-1, 6, 1),
    (1, 5, 2), (-1, 1, 2),
    (1, 3, 3), (1, 6, 3), (-1, 1, 3), (-1, 4, 3),
    (1, 3, 4), (-1, 5, 4),
)


def e_closed_form_lagrange(n: int) -> int:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    return sum(s * lagrange_coeff(k, m, n) for s, m, k in EXTRACTION_TERMS)


def _e_term(n: int, i: int) -> Fraction:
    b = binomial
    bracket = (
        b(n, i + 1) * (b(n + 1, i) - b(n + 1, i + 6))
        + 2 * b(n, i + 2) * (b(n, i + 5) - b(n, i + 1))
        + 3 * b(n, i + 3) * (b(n, i + 3) + b(n, i + 6) - b(n, i + 1) - b(n, i + 4))
        + 4 * b(n, i + 4) * (b(n, i + 3) - b(n, i + 5))
    )
    return Fraction(b(n, i) * bracket, n)


def e_closed_form_sum(n: int) -> int:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    return as_integer(sum((_e_term(n, i) for i in range(n)), Fraction(0)), f"E({n})")


def e_closed_form(n: int) -> int:
    """``E(n)`` by two closed-form routes that must agree."""
    direct = e_closed_form_sum(n)
    via_lagrange = e_closed_form_lagrange(n)
    if direct != via_lagrange:
        raise VerificationError(
            f"closed forms disagree at n={n}: sum route {direct}, Lagrange route {via_lagrange}"
        )
    return direct


def compose_operator(left: Seq[NPoly], rec: PRecurrence) -> tuple[NPoly, ...]:
    """Coefficients of ``(sum_s left[s](n) N^s)`` applied to ``rec``.

    ``N`` shifts ``n`` to ``n + 1``; coefficient ``m`` multiplies ``a(n + m)``.
    """
    out: list[NPoly] = [(0,)] * (len(left) + rec.order)
    for s, ell in enumerate(left):
        for j, c in enumerate(rec.coeffs):
            out[s + j] = npoly_add(out[s + j], npoly(ell, npoly_shift(c, s)))
    return tuple(out)


SHIFT_OPERATOR = (npoly((13, 3), (2, 1)), npoly((10, 3), (7, 1)))


def verify_operator_identity(
    n_max: int = 50,
    target: PRecurrence = ENUMERATION_RECURRENCE,
) -> Check:
    """Apply ``(3n+13)(n+2) + (3n+10)(n+7) N`` to the three-term recurrence and
    compare with the four-term one, symbolically and on values up to ``n_max``."""
    name = "operator"
    if n_max < 4:
        raise DomainError("n_max must be at least 4")
    composed = compose_operator(SHIFT_OPERATOR, E3_RECURRENCE)
    labels = ("a_n", "b_n", "c_n", "d_n")
    for idx, (got, want) in enumerate(zip(composed, target.coeffs)):
        if got != want:
            return Check.failed(
                name,
                {"coefficient": labels[idx], "composed": list(got), "expected": list(want)},
                n_max=n_max,
            )
    for idx, got in enumerate(composed):
        if npoly_degree(got) > 4:
            return Check.failed(name, {"coefficient": labels[idx], "degree": npoly_degree(got)},
                                n_max=n_max)
    e3 = e3_sequence(n_max + target.order)
    for n in range(target.offset, n_max + 1):
        lhs = sum(npoly_eval(c, n) * e3[n + j] for j, c in enumerate(target.coeffs))
        if lhs != 0:
            return Check.failed(name, {"n": n, "residual": lhs}, n_max=n_max)
    return Check.passed(name, n_max=n_max)


def _transform_check(
    name: str,
    inner: Callable[[int], int],
    outer: Callable[[int], int],
    n_max: int,
    **params,
) -> Check:
    """``outer(n + 1) == sum_i binom(n, i) inner(i)`` for ``0 <= n <= n_max``."""
    a = Sequence(0, tuple(inner(i) for i in range(n_max + 1)))
    b = binomial_transform(a)
    for n in range(n_max + 1):
        want = outer(n + 1)
        if b.values[n] != want:
            return Check.failed(name, {"n": n, "transform": b.values[n], "expected": want},
                                n_max=n_max, **params)
    return Check.passed(name, n_max=n_max, **params)


def verify_c3_identity(n_max: int = 100, brute_max: int = 7) -> Check:
    """``C_3(n+1) = sum binom(n,i) E_3(i)``: recurrence route up to ``n_max``,
    brute-force crossing counts up to ``brute_max``."""
    name = "identity-c3"
    e3 = e3_sequence(n_max)
    c3 = c3_sequence(n_max + 1)
    result = _transform_check(name, e3.__getitem__, c3.__getitem__, n_max)
    if not result:
        return result
    if brute_max > 0:
        brute = _transform_check(
            name,
            lambda i: count_crossing_avoiders(i, 3, enhanced=True),
            lambda i: count_crossing_avoiders(i, 3, enhanced=False),
            brute_max,
        )
        if not brute:
            return Check.failed(name, {**brute.counterexample, "route": "brute"},
                                n_max=n_max, brute_max=brute_max)
    return Check.passed(name, n_max=n_max, brute_max=brute_max)


def verify_motzkin_identity(n_max: int = 12) -> Check:
    """Catalan numbers are the binomial transform of Motzkin numbers."""
    return _transform_check("identity-motzkin", motzkin, catalan, n_max)


def verify_kimlin(k: int, n_max: int) -> Check:
    """``C_k(n+1) = sum_i binom(n,i) E_k(i)`` for ``n <= n_max`` by brute force."""
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    return _transform_check(
        f"kimlin:{k}",
        lambda i: count_crossing_avoiders(i, k, enhanced=True),
        lambda i: count_crossing_avoiders(i, k, enhanced=False),
        n_max,
        k=k,
    )
