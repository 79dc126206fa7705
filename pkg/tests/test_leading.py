"""Tests for leading terms, the embedding set E(pi), and N(pi)."""
from __future__ import annotations

from itertools import combinations

import pytest

from cascade.geometry import Rank, TrapezoidPoint, leq, trapezoid_points
from cascade.leading import (
    embeddings,
    enumerate_leading_terms,
    is_chain,
    is_leading_term,
    n_count,
)
from cascade.partitions import ColoredPartition, divides, enumerate_partitions

X = TrapezoidPoint(1, 1)
Y = TrapezoidPoint(1, 2)
Z = TrapezoidPoint(2, 1)


def test_is_chain_examples():
    assert is_chain([Z, X])
    assert not is_chain([X, Y])
    assert is_chain(
        [TrapezoidPoint(3, 1), TrapezoidPoint(2, 2), TrapezoidPoint(1, 2)]
    )
    assert is_chain([])
    assert is_chain([X])


def test_is_leading_term_examples():
    rank = Rank(1)
    assert is_leading_term(ColoredPartition({Z: 2, X: 1}), rank)
    assert not is_leading_term(ColoredPartition({X: 1, Y: 1, Z: 1}), rank)
    assert not is_leading_term(ColoredPartition({Z: 2}), rank)


def test_enumerate_leading_terms_n1():
    rank = Rank(1)
    region = trapezoid_points(rank)
    terms = list(enumerate_leading_terms(rank, region))
    assert len(terms) == len(set(terms))
    by_support_size = {}
    for t in terms:
        assert is_leading_term(t, rank)
        by_support_size[len(t.support)] = by_support_size.get(len(t.support), 0) + 1
    # 9 cubes a^3; 16 two-point chains, two compositions each; 8 three-point
    # chains, one composition each.
    assert by_support_size == {1: 9, 2: 32, 3: 8}
    assert len(terms) == 49


@pytest.mark.parametrize("n", [1, 2])
def test_enumerate_leading_terms_complete(n):
    rank = Rank(n)
    region = trapezoid_points(rank)
    terms = set(enumerate_leading_terms(rank, region))
    brute = {
        pi
        for pi in enumerate_partitions(region, rank.k + 1)
        if is_leading_term(pi, rank)
    }
    assert terms == brute


def test_embeddings_examples():
    rank = Rank(1)
    pi = ColoredPartition({X: 1, Y: 1, Z: 2})
    e = embeddings(pi, rank)
    assert set(e) == {
        ColoredPartition({X: 1, Z: 2}),
        ColoredPartition({Y: 1, Z: 2}),
    }
    assert n_count(pi, rank) == 1

    quad = ColoredPartition({X: 4})
    assert embeddings(quad, rank) == [ColoredPartition({X: 3})]
    assert n_count(quad, rank) == 0


def test_embeddings_incomparable_squares():
    rank = Rank(1)
    pi = ColoredPartition({X: 2, Y: 2})
    assert embeddings(pi, rank) == []
    assert n_count(pi, rank) == 0


def test_four_point_chain_has_three_extra_embeddings():
    rank = Rank(2)
    chain = [
        TrapezoidPoint(4, 1),
        TrapezoidPoint(3, 1),
        TrapezoidPoint(2, 1),
        TrapezoidPoint(1, 1),
    ]
    assert is_chain(chain)
    pi = ColoredPartition.from_points(chain)
    assert len(embeddings(pi, rank)) == 4
    assert n_count(pi, rank) == 3


def _compositions_of_four(parts):
    if parts == 1:
        yield (4,)
        return
    def rec(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(1, remaining - slots + 2):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest
    yield from rec(4, parts)


@pytest.mark.parametrize("n", [1, 2])
def test_chain_partitions_embed_once_per_chain_point(n):
    # Any length-4 partition supported on a full r-point chain admits
    # exactly r embeddings, whatever its multiplicities.
    rank = Rank(n)
    pts = trapezoid_points(rank)
    for size in (2, 3, 4):
        for subset in combinations(pts, size):
            if not is_chain(subset):
                continue
            for mults in _compositions_of_four(size):
                pi = ColoredPartition(zip(subset, mults))
                assert len(embeddings(pi, rank)) == size
                assert n_count(pi, rank) == size - 1


def test_pair_family_has_exactly_two_embeddings():
    rank = Rank(1)
    # One point above a same-row incomparable pair, the chain point doubled.
    pi = ColoredPartition({Z: 2, X: 1, Y: 1})
    assert len(embeddings(pi, rank)) == 2
    assert n_count(pi, rank) == 1


@pytest.mark.parametrize("n", [1])
def test_embedding_monotonicity(n):
    # Growing the partition never loses embeddings.
    rank = Rank(n)
    region = trapezoid_points(rank)[:6]
    smalls = list(enumerate_partitions(region, 3))
    for small in smalls:
        e_small = set(embeddings(small, rank))
        for extra in region:
            bigger = ColoredPartition(
                dict(small.parts) | {extra: small.multiplicity(extra) + 1}
            )
            assert divides(small, bigger)
            e_big = set(embeddings(bigger, rank))
            assert e_small <= e_big


def test_leading_terms_respect_flag_of_length():
    rank = Rank(2, 3)  # level 3: leading terms have length 4
    region = trapezoid_points(rank)[:8]
    for term in enumerate_leading_terms(rank, region):
        assert term.length == 4
        assert is_chain(term.support)
