"""How the degree of the multiplicative inverse behaves on subspaces of
GF(2^8): no drop on hyperplanes, rare deep drops at codimension 2 and 3."""

from degstab import inverse_function, make_ctx, scan, serialize_subspace
from degstab.power import (
    inverse_codim2_classification,
    inverse_codim3_special_count,
    inverse_codim3_z,
)

ctx = make_ctx(8)
f = inverse_function(ctx)
print("inverse function on GF(2^8), degree 7")

for k in (1, 2, 3):
    report = scan(f, k)
    print(f"\ncodim {k}: {report.total} linear spaces")
    for d, c in sorted(report.histogram.items()):
        print(f"  restriction degree {d}: {c} spaces")

rep2 = inverse_codim2_classification(ctx)
print(f"\nclosed form: {rep2.special_count} codim-2 spaces drop the degree by 2")
first = next(rep2.spaces(ctx))
print(f"  e.g. {serialize_subspace(first)}")

z = inverse_codim3_z(ctx)
print(f"\nindicator-equation solution count z(8) = {z}")
print(f"codim-3 drop-by-3 spaces: (2^8-1) * z / 168 = {inverse_codim3_special_count(ctx)}")
