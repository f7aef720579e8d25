"""Tour of the GF(2^n) layer: moduli, arithmetic, trace, embeddings."""

from degstab import make_ctx
from degstab.gf2 import default_modulus, embed, find_embedding

ctx = make_ctx(8)
print(f"GF(2^8) with the default modulus {ctx.modulus_hex()}")
a, b = 0x57, 0x83
print(f"  {a:#x} * {b:#x} = {ctx.mul(a, b):#x}")
print(f"  inverse of {a:#x} is {ctx.inv(a):#x} "
      f"(product: {ctx.mul(a, ctx.inv(a)):#x})")
print(f"  trace values: tr(1) = {ctx.trace(1)}, tr({a:#x}) = {ctx.trace(a)}")
balanced = sum(ctx.trace(x) for x in ctx.elements())
print(f"  the trace takes value 1 on {balanced} of {ctx.size} elements")

print("\nDefault (lexicographically smallest irreducible) moduli:")
for n in range(1, 11):
    print(f"  n={n:2d}: {default_modulus(n):#x}")

print("\nEmbedding GF(2^3) into GF(2^6):")
src, dst = make_ctx(3), make_ctx(6)
e = find_embedding(src, dst)
print(f"  generator of the small field maps to {e.image_of_generator:#x}")
for x in (3, 5, 7):
    print(f"  {x:#x} -> {embed(e, x):#x}")
