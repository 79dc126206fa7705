"""Leading terms: chain-supported partitions of length k+1 and the count N(pi).

A leading term is a colored partition of length k+1 whose support is a chain,
i.e. a zig-zag downward line a_1 > a_2 > ... > a_r of pairwise comparable
points in strictly decreasing rows.  E(pi) collects the leading terms embedded
in pi, and N(pi) = max(#E(pi) - 1, 0) counts the independent differences of
embeddings demanded by pi.
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator, Sequence

from . import geometry
from .geometry import Rank
from .partitions import ColoredPartition, sub_multisets

# A leading term is an ordinary ColoredPartition constrained by
# is_leading_term; no separate wrapper type is needed.
LeadingTerm = ColoredPartition

LeqFn = Callable[[object, object], bool]


def is_chain(points: Iterable, leq: LeqFn = geometry.leq) -> bool:
    """True iff the points are pairwise comparable (a zig-zag downward line)."""
    pts = list(points)
    for i, a in enumerate(pts):
        for b in pts[i + 1 :]:
            if not (leq(a, b) or leq(b, a)):
                return False
    return True


def is_leading_term(rho: ColoredPartition, rank: Rank) -> bool:
    """True iff rho has length k+1 and chain support."""
    return rho.length == rank.k + 1 and is_chain(rho.support)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write total as an ordered sum of `parts` positive integers."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _chains(
    region: Sequence, max_size: int, leq: LeqFn
) -> Iterator[tuple]:
    """All chains of size 1..max_size in region, as top-down tuples."""
    ordered = sorted(region, key=lambda p: (-p.row, p.col))

    def extend(chain: tuple) -> Iterator[tuple]:
        yield chain
        if len(chain) == max_size:
            return
        last = chain[-1]
        for q in ordered:
            if q.row < last.row and leq(q, last):
                yield from extend(chain + (q,))

    for p in ordered:
        yield from extend((p,))


def enumerate_leading_terms(
    rank: Rank, region: Sequence
) -> Iterator[LeadingTerm]:
    """Every leading term supported in region, exactly once.

    Chains of size r carry C(k, r-1) terms each, one per composition of k+1
    into r positive multiplicities.
    """
    k = rank.k
    for chain in _chains(region, k + 1, geometry.leq):
        for mults in _compositions(k + 1, len(chain)):
            yield ColoredPartition(zip(chain, mults))


def embeddings(pi: ColoredPartition, rank: Rank) -> list[LeadingTerm]:
    """E(pi): the leading terms dividing pi."""
    return [
        rho for rho in sub_multisets(pi, rank.k + 1) if is_leading_term(rho, rank)
    ]


def n_count(pi: ColoredPartition, rank: Rank) -> int:
    """N(pi) = max(#E(pi) - 1, 0)."""
    return max(len(embeddings(pi, rank)) - 1, 0)
