"""Set partitions of {1, ..., n} in a canonical deterministic order.

Partitions are enumerated through restricted growth strings: position i of
the string names the block element i+1 belongs to, and a new block label may
exceed the running maximum by at most one.  Blocks are therefore ordered by
their minimum element, with the block containing 1 first.  The enumeration
walks label choices from high to low, which lists finer partitions before
coarser ones (all singletons first, the one-block partition last).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, TypeVar

T = TypeVar("T")


@dataclass(frozen=True)
class SetPartition:
    """Disjoint nonempty sorted blocks covering {1, ..., n}, ordered by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block in a set partition")
            if tuple(sorted(block)) != block:
                raise ValueError(f"block {block} is not sorted")
            if seen & set(block):
                raise ValueError("blocks of a set partition must be disjoint")
            seen.update(block)
        n = len(seen)
        if seen != set(range(1, n + 1)):
            raise ValueError(f"blocks must cover 1..{n} exactly")
        mins = [block[0] for block in self.blocks]
        if mins != sorted(mins):
            raise ValueError("blocks must be ordered by their minimum element")

    @property
    def ground_size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return "|".join("{" + ",".join(str(i) for i in block) + "}" for block in self.blocks)


def _from_growth_string(labels: Sequence[int]) -> SetPartition:
    count = max(labels) + 1
    blocks: list[list[int]] = [[] for _ in range(count)]
    for i, label in enumerate(labels):
        blocks[label].append(i + 1)
    return SetPartition(tuple(tuple(b) for b in blocks))


def enumerate_partitions(n: int) -> list[SetPartition]:
    """All set partitions of {1, ..., n}, each exactly once, finest first.

    ``n = 0`` yields the empty list by convention.
    """
    if n < 0:
        raise ValueError("cannot partition a negative-size set")
    if n == 0:
        return []
    labels = [0] * n
    out: list[SetPartition] = []

    def walk(i: int, top: int) -> None:
        if i == n:
            out.append(_from_growth_string(labels))
            return
        for label in range(top + 1, -1, -1):
            labels[i] = label
            walk(i + 1, max(top, label))

    walk(1, 0)
    return out


def index_select(args: Sequence[T], indices: Sequence[int]) -> tuple[T, ...]:
    """Pick entries of ``args`` by 1-based indices, in increasing index order."""
    picked = sorted(indices)
    for i in picked:
        if not 1 <= i <= len(args):
            raise IndexError(f"index {i} out of range for {len(args)} arguments")
    return tuple(args[i - 1] for i in picked)
