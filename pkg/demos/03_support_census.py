"""
Classifying supports and running the full census
================================================

Every partition with a positive count N has a support falling into one
of thirteen shapes: chains A(r), chains broken by one incomparable pair
near the bottom B(r, delta), near the top C(delta, s), or in the middle
D(r, delta, s), where delta records whether the pair shares a row.
This script classifies a few supports by hand, then runs the exhaustive
census and prints every table it produces.
"""

from cascade.census import classify_support, oracle_full, oracle_supports, all_types
from cascade.geometry import Rank, TrapezoidPoint

P = TrapezoidPoint

# Three small supports, classified point by point.  The pair {(1,1),(1,2)}
# shares row one, so delta is "|"; a pair on different rows gets "||".
examples = [
    [P(2, 1), P(1, 1), P(1, 2)],
    [P(2, 1), P(2, 2), P(1, 2)],
    [P(3, 1), P(2, 1), P(2, 2), P(1, 2)],
    [P(3, 1), P(2, 1), P(1, 1)],
    [P(1, 1), P(1, 2), P(1, 3)],
]
for support in examples:
    tag = classify_support(support)
    label = tag.key() if tag is not None else "unclassified"
    print(f"{[tuple(p) for p in support]} -> {label}")

# The census: N summed over all length-four partitions, bucketed three
# ways.  Rank two finishes in under a second.
rank = Rank(2)
report = oracle_full(rank)
print(f"\ncensus at n={rank.n}: total {report.total}, "
      f"unclassified {report.unclassified}")

print("\nby support type (count of partitions / distinct supports):")
for t in all_types():
    print(f"  {t.key():7s} {report.n_by_type[t]:6d}  on {report.sigma[t]:4d} supports")

print("\nby total degree:")
for degree, value in report.n_by_degree.items():
    print(f"  {degree:4d}: {value}")

print("\nby shape (multiset of point degrees):")
for shape, value in report.n_by_shape.items():
    if value:
        print(f"  {shape}: {value}")

# Counting distinct supports of one type never needs the partition walk:
# a dedicated subset walk gives the same numbers directly.
print("\nsupport walk cross-check at n=2:")
for t in all_types()[:4]:
    assert oracle_supports(rank, t) == report.sigma[t]
    print(f"  {t.key():7s} {oracle_supports(rank, t)} supports (matches census)")
