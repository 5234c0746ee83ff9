"""Truncated-series checks of the functional equations and the kernel identity.

Functional equations are compared in denominator-cleared form so that every
side is a polynomial in ``u, v`` at each power of ``t``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DomainError, RemainderError, VerificationError
from .gentree import AW_RULE, GGM_RULE, level_profiles, level_series
from .polys import UV, Poly, TSeries, laurent
from .recurrences import c3_sequence, e3_sequence, lagrange_coeff
from .report import Check

__all__ = [
    "aw_series",
    "e_diag_series",
    "f_n_aw",
    "f_polys_aw",
    "ggm_series",
    "ode_lhs",
    "pt_x",
    "r_series",
    "verify_aw_feq",
    "verify_ggm_feq",
    "verify_kernel_identity",
    "verify_lagrange",
    "verify_ode",
    "y_series",
]

U = Poly.var("u", UV)
V = Poly.var("v", UV)
ZERO_UV = Poly(UV)
X = Poly.var("x")
XBAR = laurent({-1: 1})
ZERO_X = Poly(("x",))


def _series_from_levels(levels: Sequence[Poly], order: int) -> TSeries[Poly]:
    # levels[i] is the coefficient of t^(i+1).
    return TSeries([ZERO_UV] + list(levels[:order]), order, ZERO_UV)


def ggm_series(order: int) -> TSeries[Poly]:
    """``E(t; u, v)`` to ``t^order`` from the GGM generating tree."""
    return _series_from_levels(level_series(GGM_RULE, order), order)


def aw_series(order: int) -> TSeries[Poly]:
    """``F(t; u, v)`` to ``t^order`` from the AW generating tree."""
    return _series_from_levels(level_series(AW_RULE, order), order)


def _first_mismatch(lhs: TSeries[Poly], rhs: TSeries[Poly]) -> dict | None:
    n = lhs.first_difference(rhs)
    if n is None:
        return None
    diff = lhs[n] - rhs[n]
    mono, coef = diff.items()[0]
    return {"t": n, "monomial": dict(zip(diff.vars, mono)), "difference": str(coef)}


def _substitute_series(s: TSeries[Poly], assignments) -> TSeries[Poly]:
    return s.map(lambda c: c.substitute(assignments, UV))


def verify_ggm_feq(order: int, series: TSeries[Poly] | None = None) -> Check:
    """Check, coefficient-wise in ``t`` up to ``order``::

        [(1-u)(u-v) + t v (u-v) + t u v (1-u)] E(u,v)
            = t u v (1-u)(u-v) + t v (u-v) E(1,v) + t u v (1-u) E(u,u)
    """
    if order < 1:
        raise DomainError(f"order must be at least 1, got {order}")
    E = ggm_series(order) if series is None else series.truncate(order)
    e_1v = _substitute_series(E, {"u": 1})
    e_uu = _substitute_series(E, {"v": U})
    a = (1 - U) * (U - V)
    b = V * (U - V)
    c = U * V * (1 - U)
    lhs = E * a + (E * (b + c)).shift()
    rhs = (e_1v * b + e_uu * c).shift() + TSeries([ZERO_UV, c * (U - V)], order, ZERO_UV)
    bad = _first_mismatch(lhs.truncate(order), rhs.truncate(order))
    if bad:
        return Check.failed("feq-ggm", bad, order=order)
    return Check.passed("feq-ggm", order=order)


def _divided_difference(numer: Poly, denom: Poly) -> Poly:
    try:
        return numer.exact_divide(denom)
    except RemainderError as exc:
        raise RemainderError(f"AW recursion: {exc}") from None


def f_polys_aw(n_max: int) -> list[Poly]:
    """``[f_1, ..., f_{n_max}]``: ``f_1 = uv`` and for ``n >= 2``::

        f_n = uv (f(v,1) - f(u,1)) / (v - u) + uv (f(u,1) - f(u,u)) / (1 - u)

    with ``f = f_{n-1}``; both divisions must be exact.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")
    polys = [U * V]
    for _ in range(2, n_max + 1):
        f = polys[-1]
        f_v1 = f.substitute({"u": V, "v": 1}, UV)
        f_u1 = f.substitute({"v": 1}, UV)
        f_uu = f.substitute({"v": U}, UV)
        first = _divided_difference(f_v1 - f_u1, V - U)
        second = _divided_difference(f_u1 - f_uu, 1 - U)
        polys.append(U * V * (first + second))
    return polys


def f_n_aw(n: int) -> Poly:
    return f_polys_aw(n)[-1]


def verify_aw_feq(order: int) -> Check:
    """The polynomial recursion, the cleared functional equation::

        (v-u)(1-u) F = t uv (v-u)(1-u) + t uv (1-u)(F(v,1) - F(u,1))
                       + t uv (v-u)(F(u,1) - F(u,u))

    and agreement with the AW generating tree, all up to ``t^order``.
    """
    name = "feq-aw"
    if order < 1:
        raise DomainError(f"order must be at least 1, got {order}")
    polys = f_polys_aw(order)
    tree = level_series(AW_RULE, order)
    for n, (f, g) in enumerate(zip(polys, tree), start=1):
        if f != g:
            return Check.failed(name, {"t": n, "recursion": repr(f), "tree": repr(g)}, order=order)
    F = _series_from_levels(polys, order)
    f_v1 = _substitute_series(F, {"u": V, "v": 1})
    f_u1 = _substitute_series(F, {"v": 1})
    f_uu = _substitute_series(F, {"v": U})
    uv = U * V
    lhs = F * ((V - U) * (1 - U))
    rhs = (
        (f_v1 - f_u1) * (uv * (1 - U)) + (f_u1 - f_uu) * (uv * (V - U))
    ).shift() + TSeries([ZERO_UV, uv * (V - U) * (1 - U)], order, ZERO_UV)
    bad = _first_mismatch(lhs.truncate(order), rhs.truncate(order))
    if bad:
        return Check.failed(name, bad, order=order)
    return Check.passed(name, order=order)


def _y_step(y: TSeries[Poly]) -> TSeries[Poly]:
    # t (1 + xbar) (1 + Y) (x + Y)
    prod = (y + _const_x(1, y.order)) * (y + _const_x(X, y.order))
    return prod.map(lambda c: c * (1 + XBAR)).shift().truncate(y.order)


def _const_x(c, order: int) -> TSeries[Poly]:
    c = c if isinstance(c, Poly) else Poly.const(c, ("x",))
    return TSeries([c], order, ZERO_X)


def y_series(order: int) -> TSeries[Poly]:
    """The series ``Y = t (1 + xbar)(1 + Y)(x + Y)`` by fixed-point iteration.

    Runs ``order`` iterations from 0, then asserts one more leaves it fixed and
    that ``[t^n] Y`` is supported on ``x^-(n-1) .. x^n``.
    """
    if order < 1:
        raise DomainError(f"order must be at least 1, got {order}")
    y = TSeries([], order, ZERO_X)
    for _ in range(order):
        y = _y_step(y)
    if _y_step(y) != y:
        raise VerificationError(f"Y iteration not stationary after {order} steps")
    for n in range(1, order + 1):
        span = y[n].degree_range("x")
        if span is None or span[0] < -(n - 1) or span[1] > n:
            raise VerificationError(f"[t^{n}] Y has x-support {span}")
    return y


# Laurent coefficients multiplying Y, Y^2, Y^3, Y^4 in R(x, Y).
R_WEIGHTS = (
    laurent({1: 1, 0: 1, -5: -1, -6: -1}),
    laurent({-5: 1, -1: -1}),
    laurent({-3: 1, -6: 1, -1: -1, -4: -1}),
    laurent({-3: 1, -5: -1}),
)


def r_series(order: int, y: TSeries[Poly] | None = None) -> TSeries[Poly]:
    """``R = Y(x+1-xbar^5-xbar^6) + Y^2(xbar^5-xbar) + Y^3(xbar^3+xbar^6-xbar-xbar^4)
    + Y^4(xbar^3-xbar^5)``."""
    y = y_series(order) if y is None else y
    total = TSeries([], order, ZERO_X)
    power = y
    for k, weight in enumerate(R_WEIGHTS, start=1):
        if k > 1:
            power = power * y
        total = total + power.map(lambda c, w=weight: c * w)
    return total


def pt_x(s: TSeries[Poly]) -> TSeries[Poly]:
    """Keep only nonnegative powers of ``x`` in every coefficient."""
    return s.map(lambda c: c.nonnegative_part("x"))


def e_diag_series(order: int) -> TSeries[Poly]:
    """``E(1+x, 1+x)``: ``[t^n]`` is ``sum mult * (1+x)^(p+q)`` over level n."""
    if order < 1:
        raise DomainError(f"order must be at least 1, got {order}")
    one_plus_x = 1 + X
    coeffs = [ZERO_X]
    for prof in level_profiles(GGM_RULE, order):
        acc = ZERO_X
        for label, mult in prof.multiplicities.items():
            acc = acc + one_plus_x ** (label.p + label.q) * mult
        coeffs.append(acc)
    return TSeries(coeffs, order, ZERO_X)


def verify_kernel_identity(order: int) -> Check:
    """``PT_x R(x, Y) == E(1+x, 1+x)`` up to ``t^order``."""
    lhs = pt_x(r_series(order))
    rhs = e_diag_series(order)
    n = lhs.first_difference(rhs)
    if n is not None:
        return Check.failed("kernel", {"t": n, "pt_r": repr(lhs[n]), "e_diag": repr(rhs[n])},
                            order=order)
    return Check.passed("kernel", order=order)


def verify_lagrange(order: int = 10, k_max: int = 4, m_max: int = 6) -> Check:
    """Coefficients of powers of :func:`y_series` against the closed-form sum."""
    name = "lagrange"
    y = y_series(order)
    power = y
    for k in range(1, k_max + 1):
        if k > 1:
            power = power * y
        for n in range(1, order + 1):
            for m in range(-m_max, m_max + 1):
                got = power[n].coeff(m)
                want = lagrange_coeff(k, m, n)
                if got.denominator != 1 or got != want:
                    return Check.failed(
                        name, {"k": k, "m": m, "n": n, "series": str(got), "formula": want},
                        order=order,
                    )
    return Check.passed(name, order=order, k_max=k_max, m_max=m_max)


# (polynomial coefficients in t of the second, first and zeroth derivative
# terms, right-hand side coefficients) for each ODE.
ODES = {
    "E": ((0, 0, 1, -7, -8), (0, 12, -46, -40), (30, -42, -24), (30,)),
    "F": ((0, 0, 1, -7, -8), (0, 10, -32, -24), (20, -10), (0, 30)),
    "C": ((0, 0, 1, -10, 9), (0, 10, -54, 36), (20, -30), (0, 30)),
}


def _ode_argument(which: str, order: int) -> TSeries[int]:
    if which == "E":
        return TSeries(e3_sequence(order).values, order)
    if which == "F":
        return TSeries((0,) + e3_sequence(order - 1).values, order)
    if which == "C":
        return TSeries((0,) + c3_sequence(order).values, order)
    raise DomainError(f"unknown ODE {which!r}; expected E, F or C")


def ode_lhs(which: str, order: int) -> TSeries[int]:
    """The differential operator for ``which`` applied to its series, valid
    through ``t^(order-2)``."""
    which = which.upper()
    if order < 3:
        raise DomainError(f"order must be at least 3, got {order}")
    if which not in ODES:
        raise DomainError(f"unknown ODE {which!r}; expected E, F or C")
    series = _ode_argument(which, order)
    p2, p1, p0, _ = ODES[which]
    d1 = series.derivative()
    d2 = d1.derivative()
    return (
        d2 * TSeries.polynomial(p2, d2.order)
        + d1 * TSeries.polynomial(p1, d1.order)
        + series * TSeries.polynomial(p0, series.order)
    )


def verify_ode(which: str, order: int) -> Check:
    """The linear ODE for ``E(t) = sum E_3(n) t^n``, ``F = t E`` or
    ``C(t) = sum C_3(n) t^n`` holds for ``t^0 .. t^(order-2)``."""
    name = f"ode-{which.lower()}"
    out = ode_lhs(which, order)
    want = TSeries.polynomial(ODES[which.upper()][3], out.order)
    n = out.first_difference(want)
    if n is not None:
        return Check.failed(name, {"t": n, "lhs": out[n], "rhs": want[n]}, order=order)
    return Check.passed(name, order=order)
