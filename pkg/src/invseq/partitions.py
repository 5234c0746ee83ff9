"""Set partitions, arc diagrams and (enhanced) k-crossings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import _kernels
from .errors import DomainError, ResourceLimitError

DEFAULT_MAX_N = 12

__all__ = [
    "Arc",
    "DEFAULT_MAX_N",
    "SetPartition",
    "arcs",
    "count_crossing_avoiders",
    "enumerate_partitions",
    "has_k_crossing",
    "has_k_crossing_naive",
]


class Arc(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class SetPartition:
    """A partition of ``{1..n}``; blocks sorted internally and by minimum."""

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(1, self.n + 1)):
            raise DomainError(f"blocks {self.blocks} do not partition [1..{self.n}]")
        if any(len(b) == 0 or list(b) != sorted(b) for b in self.blocks):
            raise DomainError(f"blocks must be nonempty and sorted: {self.blocks}")
        if [b[0] for b in self.blocks] != sorted(b[0] for b in self.blocks):
            raise DomainError(f"blocks must be ordered by minimum: {self.blocks}")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> SetPartition:
        canon = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0)
        if n is None:
            n = sum(len(b) for b in canon)
        return cls(tuple(canon), n)

    @classmethod
    def from_rgf(cls, rgf: Sequence[int]) -> SetPartition:
        blocks: list[list[int]] = []
        for pos, label in enumerate(rgf, start=1):
            if label == len(blocks):
                blocks.append([pos])
            elif 0 <= label < len(blocks):
                blocks[label].append(pos)
            else:
                raise DomainError(f"not a restricted growth function: {tuple(rgf)}")
        return cls(tuple(tuple(b) for b in blocks), len(rgf))

    def rgf(self) -> tuple[int, ...]:
        """Restricted growth function: entry i is the index of the block of i+1."""
        out = [0] * self.n
        for label, block in enumerate(self.blocks):
            for x in block:
                out[x - 1] = label
        return tuple(out)

    def __str__(self) -> str:
        return ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def arcs(partition: SetPartition) -> list[Arc]:
    """One arc per pair of consecutive elements in a block, sorted."""
    return sorted(Arc(a, b) for block in partition.blocks for a, b in zip(block, block[1:]))


def _fits(chain: Sequence[Arc], enhanced: bool) -> bool:
    i_last = chain[-1].i
    j_first = chain[0].j
    return i_last <= j_first if enhanced else i_last < j_first


def has_k_crossing(partition: SetPartition, k: int, enhanced: bool = False) -> bool:
    """Whether some k arcs satisfy i_1<...<i_k<j_1<...<j_k (``<=`` at i_k, j_1 if enhanced).

    Depth-first over arcs sorted by left endpoint; a partial chain is only
    extended by an arc starting no later than the chain's first right end.
    """
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    diagram = arcs(partition)
    if len(diagram) < k:
        return False

    def extend(chain: list[Arc], start: int) -> bool:
        if len(chain) == k:
            return True
        if len(chain) + len(diagram) - start < k:
            return False
        for idx in range(start, len(diagram)):
            arc = diagram[idx]
            if chain:
                if arc.i > chain[0].j or (arc.i == chain[0].j and not enhanced):
                    break
                if arc.j <= chain[-1].j:
                    continue
            chain.append(arc)
            if extend(chain, idx + 1):
                return True
            chain.pop()
        return False

    return extend([], 0)


def has_k_crossing_naive(partition: SetPartition, k: int, enhanced: bool = False) -> bool:
    """Scan of every k-subset of arcs; slow, kept to check :func:`has_k_crossing`."""
    for subset in combinations(arcs(partition), k):
        ii = [a.i for a in subset]
        jj = [a.j for a in subset]
        if (
            all(x < y for x, y in zip(ii, ii[1:]))
            and all(x < y for x, y in zip(jj, jj[1:]))
            and _fits(subset, enhanced)
        ):
            return True
    return False


def _check_n(n: int, max_n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if n > max_n:
        raise ResourceLimitError(f"partitions of [{n}] exceed the ceiling n <= {max_n}")


def enumerate_partitions(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[SetPartition]:
    """Every partition of ``[n]``, in lexicographic order of growth functions."""
    _check_n(n, max_n)
    rows = _kernels.run_walker(_kernels.walk_rgf, n, ceiling=2**62)
    for row in rows:
        yield SetPartition.from_rgf([int(v) for v in row])


def count_crossing_avoiders(
    n: int, k: int, enhanced: bool = False, max_n: int = DEFAULT_MAX_N
) -> int:
    """``C_k(n)`` (classical) or ``E_k(n)`` (enhanced); ``n = 0`` gives 1."""
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    if n == 0:
        return 1
    _check_n(n, max_n)
    return int(_kernels.count_rgf_avoiders(n, k, enhanced, 2**62))
