"""Colored partitions: finite multisets of array points with statistics.

A colored partition is a map from points to positive multiplicities.  Its
length is the number of parts counted with multiplicity, its degree is the
multiplicity-weighted sum of point degrees, and its shape is the ordinary
partition formed by the part degrees.  Points may come from the trapezoid or
from the strip; operations that need degrees take a degree function.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations_with_replacement
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

Point = Hashable
DegreeFn = Callable[[Point], int]


class ColoredPartition:
    """Immutable multiset of points with positive multiplicities."""

    __slots__ = ("parts", "_map")

    def __init__(self, parts: Mapping | Iterable[tuple[Point, int]] = ()):
        items = parts.items() if isinstance(parts, Mapping) else parts
        acc: dict = {}
        for point, mult in items:
            if mult <= 0:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            acc[point] = acc.get(point, 0) + mult
        self.parts = tuple(sorted(acc.items()))
        self._map = acc

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "ColoredPartition":
        """Build a partition by counting a sequence of points."""
        return cls(Counter(points))

    @property
    def length(self) -> int:
        """Number of parts counted with multiplicity."""
        return sum(m for _, m in self.parts)

    @property
    def support(self) -> tuple[Point, ...]:
        """The distinct points, in sorted order."""
        return tuple(p for p, _ in self.parts)

    def multiplicity(self, point: Point) -> int:
        return self._map.get(point, 0)

    def degree(self, degree_fn: DegreeFn) -> int:
        """Multiplicity-weighted sum of part degrees; 0 for the unit partition."""
        return sum(m * degree_fn(p) for p, m in self.parts)

    def expanded(self) -> tuple[Point, ...]:
        """All parts with multiplicity, sorted."""
        return tuple(p for p, m in self.parts for _ in range(m))

    def __eq__(self, other) -> bool:
        return isinstance(other, ColoredPartition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        inner = ", ".join(f"{p}: {m}" for p, m in self.parts)
        return f"ColoredPartition({{{inner}}})"


def divides(rho: ColoredPartition, pi: ColoredPartition) -> bool:
    """True iff rho is a sub-multiset of pi (an embedding of rho into pi)."""
    return all(m <= pi.multiplicity(p) for p, m in rho.parts)


def sub_multisets(pi: ColoredPartition, length: int) -> list[ColoredPartition]:
    """All sub-multisets of pi with the given length, each exactly once.

    The number of results is the coefficient of z^length in the product of
    (1 + z + ... + z^m) over the part multiplicities m.
    """
    if length < 0 or length > pi.length:
        return []
    parts = pi.parts
    out: list[ColoredPartition] = []
    chosen: list[tuple[Point, int]] = []

    def walk(idx: int, remaining: int) -> None:
        if remaining == 0:
            out.append(ColoredPartition(list(chosen)))
            return
        if idx == len(parts):
            return
        point, mult = parts[idx]
        walk(idx + 1, remaining)
        for take in range(1, min(mult, remaining) + 1):
            chosen.append((point, take))
            walk(idx + 1, remaining - take)
            chosen.pop()

    walk(0, length)
    return out


def shape_of(pi: ColoredPartition, degree_fn: DegreeFn) -> tuple[int, ...]:
    """The ordinary partition of |pi|: part degrees sorted most negative first."""
    return tuple(sorted(degree_fn(p) for p, m in pi.parts for _ in range(m)))


def enumerate_partitions(
    region: Sequence[Point], length: int
) -> Iterator[ColoredPartition]:
    """Every partition with support in region and the given length, exactly once.

    Yields C(|region| + length - 1, length) partitions, in lexicographic order
    of the chosen points relative to the region sequence.
    """
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    for points in combinations_with_replacement(region, length):
        yield ColoredPartition.from_points(points)


def compare(pi1: ColoredPartition, pi2: ColoredPartition, degree_fn: DegreeFn) -> int:
    """Total order for deterministic reports: -1, 0 or 1.

    Longer partitions come first; among equal lengths lower degree comes
    first; ties break lexicographically on the sorted part sequence.
    """
    l1, l2 = pi1.length, pi2.length
    if l1 != l2:
        return -1 if l1 > l2 else 1
    d1, d2 = pi1.degree(degree_fn), pi2.degree(degree_fn)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    e1, e2 = pi1.expanded(), pi2.expanded()
    if e1 != e2:
        return -1 if e1 < e2 else 1
    return 0
