"""Partitions, Young diagrams and skew shapes.

Partitions are tuples of weakly decreasing positive integers, no trailing
zeros.  Cells are 0-indexed (row, col) pairs in matrix orientation.
"""

from dataclasses import dataclass
from functools import cache

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def normalize(parts) -> Partition:
    """Drop trailing zeros and validate."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def cells(lam: Partition):
    for r, length in enumerate(lam):
        for c in range(length):
            yield (r, c)


def skew_cells(outer: Partition, inner: Partition):
    for r, length in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        for c in range(start, length):
            yield (r, c)


def row_inner(inner: Partition, r: int) -> int:
    return inner[r] if r < len(inner) else 0


def add_box(lam: Partition, row: int) -> Partition | None:
    """Partition with one box added in `row` (0-based), or None if invalid."""
    if row > len(lam):
        return None
    new = list(lam) + [0] * (row + 1 - len(lam))
    new[row] += 1
    if row > 0 and new[row] > new[row - 1]:
        return None
    return tuple(new)


def remove_box(lam: Partition, row: int) -> Partition | None:
    """Partition with one box removed from `row` (0-based), or None."""
    if row >= len(lam):
        return None
    new = list(lam)
    new[row] -= 1
    if row + 1 < len(new) and new[row] < new[row + 1]:
        return None
    while new and new[-1] == 0:
        new.pop()
    return tuple(new)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse-lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_upto(n: int):
    """All partitions of size 0..n."""
    for k in range(n + 1):
        yield from partitions_of(k)


def subpartitions(lam: Partition):
    """All partitions contained in `lam`."""

    def rec(i, prev, acc):
        if i == len(lam):
            yield normalize(acc)
            return
        for p in range(min(lam[i], prev), -1, -1):
            acc.append(p)
            yield from rec(i + 1, p, acc)
            acc.pop()

    yield from rec(0, lam[0] if lam else 0, [])


def partitions_in_hook(max_size: int, p: int, q: int):
    """Partitions of size <= max_size with lam[p] <= q (the (p,q)-hook).

    These are exactly the shapes admitting semistandard fillings from an
    alphabet with p even and q odd letters.
    """
    for lam in partitions_upto(max_size):
        if len(lam) <= p or lam[p] <= q:
            yield lam


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", normalize(self.outer))
        object.__setattr__(self, "inner", normalize(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def cells(self):
        return skew_cells(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner
