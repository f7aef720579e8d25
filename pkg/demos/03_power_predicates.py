"""Closed-form predicates for power functions x^d, checked against scans,
including the x^39 case where the sufficient conditions fail but no
degree-drop space exists."""

import math

from degstab import make_ctx, power_function, scan
from degstab.power import (
    codim2_no_drop,
    codim_k_moore_sufficient,
    codim_k_sufficient,
    named_family_report,
    profile,
    zero_gap_gcd,
)

print("x^39 on GF(2^8):")
p = profile(8, 39)
print(f"  binary digits of 39 -> zero positions {sorted(p.zero_set)}, degree {p.weight}")
ctx = make_ctx(8)
print(f"  codim-2 exact criterion (gcd test): no drop = {codim2_no_drop(p)}")
print(f"  codim-3 progression condition: {codim_k_sufficient(p, 3)}")
print(f"  codim-3 Moore-set condition:   {codim_k_moore_sufficient(ctx, p, 3)}")
r = scan(power_function(ctx, 39), 3)
print(f"  exhaustive codim-3 scan: minimum restriction degree {r.extremal_degree} "
      f"(no drop below {p.weight}) -- the sufficient conditions are not necessary")

print("\nx^d with zero digits at {0, 6, 21} on GF(2^70) (predicate only):")
d70 = sum(1 << i for i in range(70) if i not in (0, 6, 21))
p70 = profile(70, d70)
print(f"  gcd of zero-position gaps = {zero_gap_gcd(p70)}, "
      f"gcd with n = {math.gcd(zero_gap_gcd(p70), 70)} -> no codim-2 drop")

print("\nnamed families:")
for rep in (
    named_family_report("gold", 5, j=1),
    named_family_report("kasami", 8, i=2),
    named_family_report("welch", 7),
    named_family_report("inverse", 8),
    named_family_report("ones-run", 7, j=3, u=2),
):
    print(f"  {rep.family:8s} n={rep.n} d={rep.d:3d} degree={rep.degree} "
          f"no-drop codim={rep.guaranteed_no_drop_codim}")
