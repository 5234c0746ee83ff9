"""Generating trees driven by succession rules on labels ``(p, q)``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import DomainError
from .polys import UV, Poly
from .report import Check
from .sequences import (
    avoids_weak_dec_triple,
    enumerate_family,
    is_aw,
    is_inversion_sequence,
)

__all__ = [
    "AW_RULE",
    "GGM_RULE",
    "Label",
    "LevelProfile",
    "SuccessionRule",
    "aw_children",
    "aw_label",
    "expand_uncompressed",
    "ggm_children",
    "ggm_label",
    "ggm_level_totals",
    "label_distribution",
    "level_profiles",
    "level_series",
    "rule_by_name",
    "verify_labels",
]


class Label(NamedTuple):
    p: int
    q: int


@dataclass(frozen=True)
class SuccessionRule:
    name: str
    root: Label
    children: Callable[[Label], list[Label]]


@dataclass
class LevelProfile:
    """Label multiplicities at one level of a generating tree."""

    level: int
    multiplicities: dict[Label, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.multiplicities.values())


def ggm_children(label: Label) -> list[Label]:
    """Children for inversion sequences avoiding weakly decreasing triples.

    Ordered by the appended last entry, from beta(e)+1 up to n.
    """
    p, q = label
    if p < 0 or q < 1:
        raise DomainError(f"invalid label {tuple(label)}")
    first = [Label(p - i, q + 1) for i in range(1, p + 1)]
    second = [Label(p + 1 + i, q - i) for i in range(q)]
    return first + second


def aw_children(label: Label) -> list[Label]:
    """Children for AW-inversion sequences, ordered by appended entry 0, 1, ..."""
    p, q = label
    if p < 1 or q < 1:
        raise DomainError(f"invalid AW label {tuple(label)}")
    first = [Label(i, p + 1 - i) for i in range(1, p + 1)]
    second = [Label(p + i, 1) for i in range(1, q + 1)]
    return first + second


GGM_RULE = SuccessionRule("ggm", Label(1, 1), ggm_children)
AW_RULE = SuccessionRule("aw", Label(1, 1), aw_children)


def rule_by_name(name: str) -> SuccessionRule:
    rules = {"ggm": GGM_RULE, "aw": AW_RULE}
    if name not in rules:
        raise DomainError(f"unknown succession rule {name!r}; expected ggm or aw")
    return rules[name]


def ggm_label(e: Sequence[int]) -> Label:
    """``(alpha - beta, n - alpha)`` with alpha the maximum and beta the largest
    entry that is not a left-to-right maximum (-1 if every entry is one)."""
    if not is_inversion_sequence(e) or not avoids_weak_dec_triple(e):
        raise DomainError(f"ggm_label: {tuple(e)} contains a weakly decreasing triple")
    top = -1
    beta = -1
    for v in e:
        if v > top:
            top = v
        else:
            beta = max(beta, v)
    return Label(top - beta, len(e) - top)


def aw_label(e: Sequence[int]) -> Label:
    """``(e_n + 1, max(e_{n-1}, e_n) + 1 - e_n)``, reading ``e_0`` as 0."""
    if not is_inversion_sequence(e) or not is_aw(e):
        raise DomainError(f"aw_label: {tuple(e)} is not an AW-inversion sequence")
    last = e[-1]
    before = e[-2] if len(e) >= 2 else 0
    return Label(last + 1, max(before, last) + 1 - last)


def level_profiles(rule: SuccessionRule, n_max: int) -> list[LevelProfile]:
    """Profiles of levels ``1..n_max``; element ``i`` is level ``i + 1``."""
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")
    current = {rule.root: 1}
    profiles = [LevelProfile(1, dict(current))]
    for level in range(2, n_max + 1):
        nxt: dict[Label, int] = {}
        for label, mult in current.items():
            for child in rule.children(label):
                nxt[child] = nxt.get(child, 0) + mult
        current = nxt
        profiles.append(LevelProfile(level, dict(sorted(current.items()))))
    return profiles


def expand_uncompressed(rule: SuccessionRule, n_max: int) -> list[list[Label]]:
    """Levels as explicit node lists, in tree order.  Exponential; small n only."""
    levels = [[rule.root]]
    for _ in range(n_max - 1):
        levels.append([c for label in levels[-1] for c in rule.children(label)])
    return levels


def label_distribution(labels: Sequence[Label]) -> dict[Label, int]:
    return dict(sorted(Counter(labels).items()))


def level_series(rule: SuccessionRule, n_max: int) -> list[Poly]:
    """Element ``i`` is ``sum mult * u^p v^q`` over level ``i + 1``."""
    return [
        Poly(UV, {(lab.p, lab.q): m for lab, m in prof.multiplicities.items()})
        for prof in level_profiles(rule, n_max)
    ]


def ggm_level_totals(n_max: int) -> list[int]:
    """Level sizes of the GGM tree for ``n = 1..n_max`` in O(n^3) big-int adds.

    The profile is kept as an object array ``G[s, q]`` = multiplicity of label
    ``(s - q, q)``.  Children of ``(p, q)`` are ``(p', q + 1)`` for ``p' < p``
    (rows ``q+1..s`` of column ``q+1``, fed by suffix sums down each column)
    and ``(s + 1 - Q, Q)`` for ``1 <= Q <= q`` (row ``s + 1``, fed by suffix
    sums along each row).
    """
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")
    size = n_max + 3
    grid = np.zeros((size, size), dtype=object)
    grid[2, 1] = 1
    rows = np.arange(size)[:, None]
    cols = np.arange(size)[None, :]
    # Column q+1 only receives rows s' >= q + 1.
    column_mask = rows >= cols
    totals = [1]
    for _ in range(2, n_max + 1):
        down = np.cumsum(grid[::-1, :], axis=0)[::-1, :]
        across = np.cumsum(grid[:, ::-1], axis=1)[:, ::-1]
        new = np.zeros_like(grid)
        new[:, 1:] = np.where(column_mask[:, 1:], down[:, :-1], 0)
        new[1:, 1:] += across[:-1, 1:]
        grid = new
        totals.append(int(grid.sum()))
    return totals


def verify_labels(n_max: int = 8) -> Check:
    """Tree label multisets equal the labels of the brute-force families."""
    for rule, family, labeller in ((GGM_RULE, "ggm", ggm_label), (AW_RULE, "aw", aw_label)):
        profiles = level_profiles(rule, n_max)
        for prof in profiles:
            brute = label_distribution([labeller(e) for e in enumerate_family(family, prof.level)])
            if brute != prof.multiplicities:
                return Check.failed(
                    "labels", {"rule": rule.name, "n": prof.level}, n_max=n_max
                )
    return Check.passed("labels", n_max=n_max)
