"""Inversion sequences, ascent sequences and their restricted families.

Sequences are plain tuples of ints stored 0-indexed; messages quote the
1-indexed positions used in the literature (``e_1`` is ``e[0]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, ResourceLimitError
from .report import Check

InversionSequence = tuple[int, ...]
AscentSequence = tuple[int, ...]
Composition = tuple[int, ...]

DEFAULT_CEILING = 10**7

__all__ = [
    "DEFAULT_CEILING",
    "Family",
    "asc",
    "avoids_weak_dec_triple",
    "avoids_weak_dec_triple_naive",
    "count_family",
    "enumerate_family",
    "is_210_avoiding",
    "is_210_avoiding_naive",
    "is_ascent_sequence",
    "is_aw",
    "is_inversion_sequence",
    "is_k_aw",
    "is_primitive",
    "parse_family",
    "phi",
    "rle_compose",
    "rle_decompose",
    "verify_phi",
]


def is_inversion_sequence(e: Sequence[int]) -> bool:
    return len(e) >= 1 and all(0 <= v <= i for i, v in enumerate(e))


def asc(prefix: Sequence[int]) -> int:
    """Number of ascents ``x_j < x_{j+1}`` in ``prefix``."""
    if len(prefix) == 0:
        raise DomainError("asc: empty sequence")
    return sum(1 for a, b in zip(prefix, prefix[1:]) if a < b)


def is_ascent_sequence(x: Sequence[int]) -> bool:
    if len(x) == 0 or x[0] != 0:
        return False
    ascents = 0
    for i in range(1, len(x)):
        if not 0 <= x[i] <= ascents + 1:
            return False
        if x[i] > x[i - 1]:
            ascents += 1
    return True


def _check_inversion(e: Sequence[int], who: str) -> InversionSequence:
    e = tuple(e)
    if not is_inversion_sequence(e):
        raise DomainError(f"{who}: not an inversion sequence: {e}")
    return e


def _check_ascent(x: Sequence[int], who: str) -> AscentSequence:
    x = tuple(x)
    if not is_ascent_sequence(x):
        raise DomainError(f"{who}: not an ascent sequence: {x}")
    return x


def avoids_weak_dec_triple_naive(e: Sequence[int]) -> bool:
    """Cubic scan for ``i < j < k`` with ``e_i >= e_j >= e_k``."""
    return not any(a >= b >= c for a, b, c in combinations(e, 3))


def avoids_weak_dec_triple(e: Sequence[int]) -> bool:
    """True iff ``e`` has no weakly decreasing subsequence of length 3.

    Linear check: the left-to-right maxima and the remaining entries must each
    be strictly increasing.
    """
    e = _check_inversion(e, "avoids_weak_dec_triple")
    top = -1
    low = -1
    for v in e:
        if v > top:
            top = v
        elif v > low:
            low = v
        else:
            return False
    return True


def is_k_aw(e: Sequence[int], k: int) -> bool:
    """``e_i <= max(e_{i-1}, ..., e_{i-k}) + 1`` for all i, with ``e_m = 0`` for m <= 0."""
    if k < 1:
        raise DomainError(f"is_k_aw: k must be positive, got {k}")
    e = _check_inversion(e, "is_k_aw")
    for i, v in enumerate(e):
        window = [e[m] for m in range(i - k, i) if m >= 0]
        if v > max(window, default=0) + 1:
            return False
    return True


def is_aw(e: Sequence[int]) -> bool:
    """``e_i <= max(e_{i-2}, e_{i-1}) + 1`` for every ``2 < i <= n``."""
    e = _check_inversion(e, "is_aw")
    return all(e[i] <= max(e[i - 2], e[i - 1]) + 1 for i in range(2, len(e)))


def is_210_avoiding_naive(x: Sequence[int]) -> bool:
    return not any(a > b > c for a, b, c in combinations(x, 3))


def is_210_avoiding(x: Sequence[int]) -> bool:
    x = _check_ascent(x, "is_210_avoiding")
    top = -1
    mid = -1
    for v in x:
        if v < mid:
            return False
        if v < top:
            mid = max(mid, v)
        top = max(top, v)
    return True


def is_primitive(x: Sequence[int]) -> bool:
    x = _check_ascent(x, "is_primitive")
    return all(a != b for a, b in zip(x, x[1:]))


@dataclass(frozen=True)
class Family:
    """One of the enumerable families; ``k`` is only used by ``kaw``."""

    name: str
    k: int = 0

    def __str__(self) -> str:
        return f"kaw:{self.k}" if self.name == "kaw" else self.name

    def contains(self, obj: Sequence[int]) -> bool:
        if self.name in INVERSION_FAMILIES:
            if not is_inversion_sequence(obj):
                return False
            if self.name == "ggm":
                return avoids_weak_dec_triple(obj)
            if self.name == "aw":
                return is_aw(obj)
            if self.name == "kaw":
                return is_k_aw(obj, self.k)
            return True
        if not is_ascent_sequence(obj):
            return False
        if self.name == "asc":
            return True
        ok = is_210_avoiding(obj)
        if self.name == "pasc210":
            ok = ok and is_primitive(obj)
        return ok


INVERSION_FAMILIES = ("inv", "ggm", "aw", "kaw")
ASCENT_FAMILIES = ("asc", "asc210", "pasc210")
_ALIASES = {"all-inversion": "inv", "ascent": "asc"}


def parse_family(spec: str | Family) -> Family:
    """Parse ``ggm``, ``aw``, ``kaw:<k>``, ``inv``, ``asc``, ``asc210``, ``pasc210``."""
    if isinstance(spec, Family):
        return spec
    name, _, arg = spec.partition(":")
    name = _ALIASES.get(name, name)
    if name == "kaw":
        try:
            k = int(arg)
        except ValueError:
            raise DomainError(f"family kaw needs an integer k, got {spec!r}") from None
        if k < 1:
            raise DomainError(f"family kaw needs k >= 1, got {k}")
        return Family("kaw", k)
    if arg or name not in INVERSION_FAMILIES + ASCENT_FAMILIES:
        raise DomainError(f"unknown family {spec!r}")
    return Family(name)


def _walker(family: Family):
    if family.name == "inv":
        return _kernels.walk_inversions, ()
    if family.name == "ggm":
        return _kernels.walk_ggm, ()
    if family.name in ("aw", "kaw"):
        return _kernels.walk_kaw, (family.k or 2,)
    return _kernels.walk_ascent, (family.name != "asc", family.name == "pasc210")


def _walk(family: Family, n: int, ceiling: int, store: bool):
    if n < 1:
        raise DomainError(f"length must be at least 1, got {n}")
    walker, extra = _walker(family)
    if store:
        result = _kernels.run_walker(walker, n, *extra, ceiling=ceiling)
    else:
        m = walker(n, *extra, ceiling, np.zeros((0, n), np.int64), False)
        result = None if m < 0 else m
    if result is None:
        raise ResourceLimitError(f"{family} at n={n} has more than {ceiling} objects")
    return result


def enumerate_family(
    family: str | Family, n: int, ceiling: int = DEFAULT_CEILING
) -> list[tuple[int, ...]]:
    """All members of ``family`` of length ``n`` in lexicographic order."""
    rows = _walk(parse_family(family), n, ceiling, store=True)
    return [tuple(int(v) for v in row) for row in rows]


def count_family(
    family: str | Family, n: int, ceiling: int = DEFAULT_CEILING
) -> int:
    return int(_walk(parse_family(family), n, ceiling, store=False))


def phi(x: Sequence[int]) -> InversionSequence:
    """Map a primitive 210-avoiding ascent sequence of length n+1 to I_n(>=,>=,-).

    ``e_i = i - 1 + x_{i+1} - asc(x_1 ... x_{i+1})``.
    """
    x = _check_ascent(x, "phi")
    if len(x) < 2:
        raise DomainError(f"phi: need length >= 2, got {x}")
    if not is_primitive(x):
        raise DomainError(f"phi: {x} is not primitive")
    if not is_210_avoiding(x):
        raise DomainError(f"phi: {x} contains 210")
    e = []
    ascents = 0
    for i in range(1, len(x)):
        if x[i] > x[i - 1]:
            ascents += 1
        # x[i] is x_{i+1}; ascents is asc(x_1 ... x_{i+1}).
        e.append(i - 1 + x[i] - ascents)
    return tuple(e)


def rle_decompose(x: Sequence[int]) -> tuple[AscentSequence, Composition]:
    """Split ``x`` into its primitive sequence of run values and the run lengths."""
    x = _check_ascent(x, "rle_decompose")
    values: list[int] = []
    runs: list[int] = []
    for v in x:
        if values and values[-1] == v:
            runs[-1] += 1
        else:
            values.append(v)
            runs.append(1)
    return tuple(values), tuple(runs)


def rle_compose(primitive: Sequence[int], parts: Iterable[int]) -> AscentSequence:
    """Inverse of :func:`rle_decompose`."""
    primitive = tuple(primitive)
    parts = tuple(parts)
    if len(parts) != len(primitive):
        raise DomainError(
            f"rle_compose: {len(parts)} parts for a sequence of length {len(primitive)}"
        )
    if any(c < 1 for c in parts):
        raise DomainError(f"rle_compose: parts must be positive, got {parts}")
    if any(a == b for a, b in zip(primitive, primitive[1:])):
        raise DomainError(f"rle_compose: {primitive} is not primitive")
    out: list[int] = []
    for v, c in zip(primitive, parts):
        out.extend([v] * c)
    return tuple(out)


def verify_phi(n_max: int = 8, ceiling: int = DEFAULT_CEILING) -> Check:
    """``phi`` maps PA_{n+1}(210) injectively onto I_n(>=,>=,-) for ``n <= n_max``."""
    for n in range(1, n_max + 1):
        sources = enumerate_family("pasc210", n + 1, ceiling)
        targets = set(enumerate_family("ggm", n, ceiling))
        images = [phi(x) for x in sources]
        image_set = set(images)
        if len(image_set) != len(images):
            return Check.failed("phi", {"n": n, "reason": "not injective"}, n_max=n_max)
        stray = sorted(image_set - targets)
        if stray:
            return Check.failed("phi", {"n": n, "reason": "image outside target",
                                        "example": list(stray[0])}, n_max=n_max)
        if len(image_set) != len(targets):
            return Check.failed("phi", {"n": n, "reason": "not surjective",
                                        "sources": len(images), "targets": len(targets)},
                                n_max=n_max)
    return Check.passed("phi", n_max=n_max)
