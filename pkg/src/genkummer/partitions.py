"""Integer partitions, the refinement order, and torsion counts.

A partition is stored with its parts in nonincreasing order.  Partitions of a
fixed ``n`` are always listed in reverse lexicographic order::

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd
from typing import Iterator, Sequence

__all__ = [
    "Partition",
    "enumerate_partitions",
    "iter_partitions",
    "gcd_of_parts",
    "torsion_component_count",
    "refines",
]


@dataclass(frozen=True, order=False)
class Partition:
    """A partition of ``n`` with cached length, multiplicities and gcd."""

    parts: tuple[int, ...]
    _key: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nonincreasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_key", tuple(-p for p in parts))

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(sorted(parts, reverse=True))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        """Map ``part value -> number of occurrences``, keys increasing."""
        return dict(sorted(Counter(self.parts).items()))

    @cached_property
    def gcd_of_parts(self) -> int:
        return reduce(gcd, self.parts)

    def sort_key(self) -> tuple[int, ...]:
        """Key that sorts partitions of equal size in reverse lexicographic order."""
        return self._key

    def __lt__(self, other: "Partition") -> bool:
        return self._key < other._key

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def iter_partitions(n: int) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse lexicographic order."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")

    def descend(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in descend(remaining - first, first):
                yield (first,) + rest

    for parts in descend(n, n):
        yield Partition(parts)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, each once, in reverse lexicographic order.

    Raises ValueError for ``n < 1``.
    """
    return list(iter_partitions(n))


def gcd_of_parts(lam: Partition) -> int:
    return lam.gcd_of_parts


def torsion_component_count(lam: Partition) -> int:
    """Number of ``e``-torsion points of an abelian surface, ``e = gcd(parts)``.

    This is ``e**4``: the number of connected components of the kernel of
    ``(x_1, ..., x_l) -> sum(lam_i * x_i)`` on ``A**l``.
    """
    return lam.gcd_of_parts**4


def refines(lam: Partition, mu: Partition) -> bool:
    """True when the parts of ``lam`` group into blocks summing to the parts of ``mu``.

    Written ``lam >= mu``.  In particular ``(1,...,1) >= lam >= (n)``.
    """
    if lam.n != mu.n:
        raise ValueError(f"partitions of different integers: {lam.n} != {mu.n}")
    if lam.length < mu.length:
        return False

    parts = lam.parts
    bins = list(mu.parts)

    def place(i: int) -> bool:
        if i == len(parts):
            return all(b == 0 for b in bins)
        tried = set()
        for j, room in enumerate(bins):
            # bins with equal remaining room are interchangeable
            if room < parts[i] or room in tried:
                continue
            tried.add(room)
            bins[j] -= parts[i]
            if place(i + 1):
                bins[j] += parts[i]
                return True
            bins[j] += parts[i]
        return False

    return place(0)
