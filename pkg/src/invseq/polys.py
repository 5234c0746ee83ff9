"""Sparse exact polynomials and truncated power series in ``t``.

:class:`Poly` is a sparse map from exponent tuples to :class:`~fractions.Fraction`
over a named tuple of variables.  Exponents may be negative, so the same class
serves as a Laurent polynomial in ``x`` (``xbar = 1/x``).  A bivariate
polynomial is simply a ``Poly`` over ``("u", "v")``.

:class:`TSeries` holds coefficients of ``t^0 .. t^N`` together with the order
``N`` up to which they are valid.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Generic, Iterable, Mapping, Sequence, TypeVar, Union

from .errors import DomainError, RemainderError

Scalar = Union[int, Fraction]
Monomial = tuple[int, ...]

__all__ = [
    "BivariatePoly",
    "LaurentPoly",
    "Poly",
    "TSeries",
    "laurent",
    "uv_poly",
]


def _merge_vars(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    return a + tuple(v for v in b if v not in a)


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, Scalar] | None = None):
        self.vars = tuple(vars)
        clean: dict[Monomial, Fraction] = {}
        if terms:
            nv = len(self.vars)
            for mono, c in terms.items():
                if len(mono) != nv:
                    raise DomainError(f"monomial {mono} does not match variables {self.vars}")
                if c:
                    clean[tuple(mono)] = Fraction(c)
        self.terms = clean

    # -- construction -------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar, vars: Sequence[str]) -> Poly:
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name: str, vars: Sequence[str] | None = None, power: int = 1) -> Poly:
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            raise DomainError(f"{name!r} is not one of {vars}")
        mono = tuple(power if v == name else 0 for v in vars)
        return cls(vars, {mono: 1})

    def _lift(self, other) -> tuple[Poly, Poly]:
        if not isinstance(other, Poly):
            return self, Poly.const(other, self.vars)
        if other.vars == self.vars:
            return self, other
        merged = _merge_vars(self.vars, other.vars)
        return self.extend(merged), other.extend(merged)

    def extend(self, vars: Sequence[str]) -> Poly:
        """The same polynomial over a superset of its variables."""
        vars = tuple(vars)
        missing = [v for v in self.vars if v not in vars]
        if missing:
            raise DomainError(f"cannot drop variables {missing}")
        where = [vars.index(v) for v in self.vars]
        out = {}
        for mono, c in self.terms.items():
            m = [0] * len(vars)
            for pos, e in zip(where, mono):
                m[pos] = e
            out[tuple(m)] = c
        return Poly(vars, out)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> Poly:
        a, b = self._lift(other)
        out = dict(a.terms)
        for mono, c in b.terms.items():
            out[mono] = out.get(mono, 0) + c
        return Poly(a.vars, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        a, b = self._lift(other)
        return a + (-b)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly(self.vars, {m: c * other for m, c in self.terms.items()})
        a, b = self._lift(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(a.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise DomainError("negative powers are not supported")
        result = Poly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                return (self - other).is_zero()
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection ---------------------------------------------------------

    def coeff(self, *exps: int) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree_range(self, var: str) -> tuple[int, int] | None:
        """``(min, max)`` exponent of ``var`` over the support, or None if zero."""
        if not self.terms:
            return None
        pos = self.vars.index(var)
        exps = [m[pos] for m in self.terms]
        return min(exps), max(exps)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items(), reverse=True):
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.vars, mono) if e]
            parts.append("*".join([str(c)] + factors) if c != 1 or not factors else "*".join(factors))
        return " + ".join(parts)

    # -- calculus and substitution -------------------------------------------

    def derivative(self, var: str) -> Poly:
        pos = self.vars.index(var)
        out = {}
        for mono, c in self.terms.items():
            e = mono[pos]
            if e:
                m = list(mono)
                m[pos] -= 1
                out[tuple(m)] = c * e
        return Poly(self.vars, out)

    def substitute(self, assignments: Mapping[str, Poly | Scalar],
                   vars: Sequence[str] | None = None) -> Poly:
        """Simultaneously replace variables by polynomials or numbers.

        The result lives over ``vars`` if given, otherwise over the untouched
        variables followed by those introduced by the replacements.
        """
        if vars is None:
            vars = tuple(v for v in self.vars if v not in assignments)
            for r in assignments.values():
                if isinstance(r, Poly):
                    vars = _merge_vars(vars, r.vars)
        vars = tuple(vars)
        images = []
        for name in self.vars:
            r = assignments.get(name, None)
            if r is None:
                images.append(Poly.var(name, vars) if name in vars else None)
            elif isinstance(r, Poly):
                images.append(r.extend(vars))
            else:
                images.append(Poly.const(r, vars))
        power_cache: dict[tuple[int, int], Poly] = {}

        def power(idx: int, e: int) -> Poly:
            key = (idx, e)
            if key not in power_cache:
                base = images[idx]
                if base is None:
                    raise DomainError(f"variable {self.vars[idx]} has no image")
                if e < 0:
                    if len(base.terms) != 1:
                        raise DomainError("negative powers need a monomial image")
                    ((m, c),) = base.terms.items()
                    power_cache[key] = Poly(vars, {tuple(x * e for x in m): c**e})
                else:
                    power_cache[key] = base ** e
            return power_cache[key]

        total = Poly(vars)
        for mono, c in self.terms.items():
            term = Poly.const(c, vars)
            for idx, e in enumerate(mono):
                if e:
                    term = term * power(idx, e)
            total = total + term
        return total

    def leading(self) -> tuple[Monomial, Fraction]:
        """Lexicographically largest monomial (in variable order) and its coefficient."""
        mono = max(self.terms)
        return mono, self.terms[mono]

    def exact_divide(self, divisor: Poly) -> Poly:
        """Quotient of an exact polynomial division.

        Raises :class:`RemainderError` if ``divisor`` does not divide ``self``.
        Negative exponents are not allowed in either operand.
        """
        a, b = self._lift(divisor)
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        for p in (a, b):
            if any(e < 0 for m in p.terms for e in m):
                raise DomainError("exact_divide needs nonnegative exponents")
        lead_m, lead_c = b.leading()
        rem = dict(a.terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            m = max(rem)
            shift = tuple(x - y for x, y in zip(m, lead_m))
            if any(s < 0 for s in shift):
                raise RemainderError(
                    f"{Poly(a.vars, a.terms)!r} is not divisible by {b!r}"
                )
            q = rem[m] / lead_c
            quot[shift] = quot.get(shift, 0) + q
            for bm, bc in b.terms.items():
                t = tuple(x + y for x, y in zip(bm, shift))
                v = rem.get(t, 0) - q * bc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Poly(a.vars, quot)

    def nonnegative_part(self, var: str) -> Poly:
        """Drop every term with a negative power of ``var``."""
        pos = self.vars.index(var)
        return Poly(self.vars, {m: c for m, c in self.terms.items() if m[pos] >= 0})

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for name, e in zip(self.vars, mono):
                term *= Fraction(values[name]) ** e
            total += term
        return total


BivariatePoly = Poly
LaurentPoly = Poly

UV = ("u", "v")


def uv_poly(terms: Mapping[tuple[int, int], Scalar]) -> Poly:
    return Poly(UV, terms)


def laurent(terms: Mapping[int, Scalar]) -> Poly:
    """Laurent polynomial in ``x`` from ``{exponent: coefficient}``."""
    return Poly(("x",), {(e,): c for e, c in terms.items()})


C = TypeVar("C")


class TSeries(Generic[C]):
    """Coefficients of ``t^0 .. t^order``; everything beyond is unknown."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[C], order: int, zero: C = 0):
        coeffs = list(coeffs)
        if order < 0:
            raise DomainError(f"order must be nonnegative, got {order}")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        while len(coeffs) < order + 1:
            coeffs.append(zero)
        self.coeffs = coeffs
        self.order = order

    def __getitem__(self, n: int) -> C:
        if not 0 <= n <= self.order:
            raise IndexError(f"t^{n} is beyond the valid order {self.order}")
        return self.coeffs[n]

    def _zero(self):
        return self.coeffs[0] * 0

    def __add__(self, other: TSeries[C]) -> TSeries[C]:
        order = min(self.order, other.order)
        return TSeries([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    def __neg__(self) -> TSeries[C]:
        return TSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: TSeries[C]) -> TSeries[C]:
        return self + (-other)

    def __mul__(self, other) -> TSeries[C]:
        if not isinstance(other, TSeries):
            return TSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = self._zero()
            for i in range(n + 1):
                a, b = self.coeffs[i], other.coeffs[n - i]
                if _nonzero(a) and _nonzero(b):
                    acc = acc + a * b
            out.append(acc)
        return TSeries(out, order)

    def __rmul__(self, other) -> TSeries[C]:
        return TSeries([other * c for c in self.coeffs], self.order)

    def __pow__(self, k: int) -> TSeries[C]:
        if k < 1:
            raise DomainError("TSeries powers start at 1")
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def shift(self, k: int = 1) -> TSeries[C]:
        """Multiply by ``t^k``; the valid order grows by ``k``."""
        zero = self._zero()
        return TSeries([zero] * k + self.coeffs, self.order + k)

    def derivative(self) -> TSeries[C]:
        """d/dt; one order of validity is lost."""
        if self.order == 0:
            raise DomainError("cannot differentiate a series known only to order 0")
        return TSeries([c * n for n, c in enumerate(self.coeffs)][1:], self.order - 1)

    def map(self, fn: Callable[[C], C]) -> TSeries[C]:
        return TSeries([fn(c) for c in self.coeffs], self.order)

    def truncate(self, order: int) -> TSeries[C]:
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return TSeries(self.coeffs[: order + 1], order)

    def first_difference(self, other: TSeries[C]) -> int | None:
        """Lowest ``t``-degree where the series differ, on their common order."""
        for n in range(min(self.order, other.order) + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        return f"TSeries({self.coeffs!r}, order={self.order})"

    @classmethod
    def polynomial(cls, coeffs: Sequence[C], order: int) -> TSeries[C]:
        """An exact polynomial in ``t`` viewed to order ``order``."""
        zero = coeffs[0] * 0 if coeffs else 0
        return cls(coeffs, order, zero)


def _nonzero(c) -> bool:
    if isinstance(c, Poly):
        return bool(c.terms)
    return c != 0
