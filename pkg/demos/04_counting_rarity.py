"""Exact counts of functions by degree-drop/fast-point structure, and how
rare the maximum-fast-point property is for degree 3 in 6 variables."""

import math

from degstab.counting import (
    CountQuery,
    brute_force_count,
    count_exact_drop_dimension,
    count_exact_fast_dimension,
    count_no_drop_hyperplane,
)

print("Boolean quadratics in 4 variables (degree-drop hyperplane structure):")
census = brute_force_count(4, 1, 2, "drop-hyperplanes")
for j in sorted(census):
    formula = count_exact_drop_dimension(CountQuery(4, 1, 2, j=j))
    print(f"  drop-direction space of dim {j}: census {census[j]}, formula {formula}")
print(f"  no drop hyperplane at all: {count_no_drop_hyperplane(CountQuery(4, 1, 2))}")

print("\nhomogeneous (6,6)-functions of degree 3 with the maximum 2^3-1 fast points:")
c = count_exact_fast_dimension(CountQuery(6, 6, 3, j=3))
total = (1 << 120) - 1
print(f"  exact count: {c}  (= 1395 subspaces x 63 coefficient vectors)")
print(f"  out of {total} nonzero homogeneous functions")
print(f"  proportion ~ 2^{math.log2(c) - math.log2(total):.1f}")
