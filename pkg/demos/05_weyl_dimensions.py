"""
Weyl dimensions and the identity behind the census total
========================================================

The census total is not an accident: it equals an alternating
combination of dimensions of three irreducible modules for the rank-n
symplectic Lie algebra.  This script evaluates the Weyl dimension
formula, the closed binomial forms it collapses to, and the identity
tying everything together.
"""

from cascade.closed_forms import (
    binomial,
    dim_4theta_minus_alpha,
    dim_relation_space,
    dim_s_theta,
    equivalence_identity,
    n_total_closed,
    weyl_dim,
)
from cascade.geometry import Rank

# The Weyl dimension formula for arbitrary dominant weights, written as
# a partition with at most n parts.
rank = Rank(3)
for weight in ((), (1,), (1, 1), (2,), (2, 2), (7, 1)):
    print(f"dim at highest weight {weight or (0,)}: {weyl_dim(rank, weight)}")

# Multiples of the highest root theta collapse to one binomial
# coefficient: dim at s*theta equals C(2n+2s-1, 2s).
print("\ndim at s*theta vs the binomial form:")
for n in (1, 2, 3, 5):
    r = Rank(n)
    row = []
    for s in range(5):
        value = dim_s_theta(r, s)
        assert value == binomial(2 * n + 2 * s - 1, 2 * s)
        row.append(str(value))
    print(f"  n={n}: " + " ".join(row))

# The weight (7,1) also collapses to a closed product.  It only exists
# from rank two on; at rank one the formula returns zero.
print("\ndim at (7,1):")
for n in (1, 2, 3, 4):
    print(f"  n={n}: {dim_4theta_minus_alpha(Rank(n))}")

# The space of relations has dimension 2n * C(2n+6, 7), and splits as
# the sum of the three modules above.
print("\nrelation space dimension and its three-part split:")
for n in (1, 2, 3, 10):
    r = Rank(n)
    total = dim_relation_space(r)
    parts = (dim_s_theta(r, 3), dim_s_theta(r, 4), dim_4theta_minus_alpha(r))
    assert total == sum(parts)
    print(f"  n={n}: {total} = {parts[0]} + {parts[1]} + {parts[2]}")

# And the punch line: nine copies of the relation space, minus two of
# the top module, count exactly the census terms.
print("\ncensus total vs dimension identity:")
for n in (1, 2, 3, 10, 100):
    r = Rank(n)
    lhs = 9 * dim_relation_space(r) - 2 * dim_s_theta(r, 4)
    assert equivalence_identity(r)
    print(f"  n={n}: 9*{dim_relation_space(r)} - 2*{dim_s_theta(r, 4)} "
          f"= {lhs} = total {n_total_closed(r)}")
