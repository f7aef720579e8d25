"""Arithmetic in GF(2^n) for 1 <= n <= 20.

Field elements are ints in [0, 2^n) read as polynomial residues modulo an
irreducible polynomial (bit i = coefficient of x^i).  All operations route
through a FieldCtx; two contexts with the same (n, modulus) behave
identically.  The inverse of 0 is defined to be 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple

from .linalg import is_independent

MAX_N = 20


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two F_2[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    dm = poly_degree(m)
    while poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    return poly_mod(poly_mul(a, b), m)


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_powmod_x(e: int, m: int) -> int:
    """x^e mod m by square-and-multiply."""
    result, base = 1, 2
    while e:
        if e & 1:
            result = poly_mulmod(result, base, m)
        base = poly_mulmod(base, base, m)
        e >>= 1
    return result


def is_irreducible(p: int) -> bool:
    """Rabin test for irreducibility over F_2."""
    n = poly_degree(p)
    if n < 1:
        return False
    if not (p & 1):  # 0 is a root (this also excludes x itself as a modulus)
        return False
    if n == 1:
        return True
    # x^(2^n) == x (mod p)
    if poly_powmod_x(1 << n, p) != 2:
        return False
    for q in _prime_factors(n):
        h = poly_powmod_x(1 << (n // q), p) ^ 2  # x^(2^(n/q)) + x
        if poly_gcd(p, h) != 1:
            return False
    return True


def _prime_factors(n: int) -> List[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree n."""
    for p in range(1 << n, 1 << (n + 1)):
        if is_irreducible(p):
            return p
    raise RuntimeError(f"no irreducible polynomial of degree {n}")  # unreachable


@dataclass(frozen=True)
class FieldCtx:
    """A concrete GF(2^n): extension degree plus irreducible modulus."""

    n: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"extension degree must be in 1..{MAX_N}, got {self.n}")
        if poly_degree(self.modulus) != self.n:
            raise ValueError(
                f"modulus {self.modulus:#x} has degree {poly_degree(self.modulus)}, expected {self.n}"
            )
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible over F_2")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def order(self) -> int:
        """Multiplicative group order 2^n - 1."""
        return (1 << self.n) - 1

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return poly_mulmod(a, b, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if a == 0:
            return 1 if e == 0 else 0  # 0^0 = 1 (constant-monomial convention)
        e %= self.order
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        """Multiplicative inverse, with inv(0) = 0."""
        if a == 0:
            return 0
        return self.pow(a, self.order - 1)

    def trace(self, a: int) -> int:
        """Absolute trace tr(a) = a + a^2 + a^4 + ... + a^(2^(n-1)), in {0, 1}."""
        acc, t = 0, a
        for _ in range(self.n):
            acc ^= t
            t = self.mul(t, t)
        # acc lies in F_2 = {0, 1}
        return acc

    def modulus_hex(self) -> str:
        return f"{self.modulus:#X}".replace("0X", "0x")


def make_ctx(n: int, modulus: int | None = None) -> FieldCtx:
    """Build a field context; default modulus is the lex-smallest irreducible."""
    if modulus is None:
        if not 1 <= n <= MAX_N:
            raise ValueError(f"extension degree must be in 1..{MAX_N}, got {n}")
        modulus = default_modulus(n)
    return FieldCtx(n, modulus)


def parse_modulus(text: str) -> int:
    return int(text, 16)


@lru_cache(maxsize=None)
def log_tables(ctx: FieldCtx) -> Tuple[tuple, tuple]:
    """(exp, log) tables for ctx; exp has length 2*(2^n - 1) to skip one mod.

    log[0] is a sentinel (-1) and must never be used as an exponent.
    """
    order = ctx.order
    g = _find_generator(ctx)
    exp = [1] * (2 * order)
    cur = 1
    for i in range(order):
        exp[i] = cur
        cur = ctx.mul(cur, g)
    for i in range(order, 2 * order):
        exp[i] = exp[i - order]
    log = [-1] * ctx.size
    for i in range(order):
        log[exp[i]] = i
    return tuple(exp), tuple(log)


def _find_generator(ctx: FieldCtx) -> int:
    order = ctx.order
    factors = _prime_factors(order) if order > 1 else []
    for g in range(2, ctx.size):
        if all(ctx.pow(g, order // q) != 1 for q in factors):
            return g
    return 1  # n = 1: the group is trivial


@dataclass(frozen=True)
class Embedding:
    """Ring homomorphism GF(2^n) -> GF(2^(n*u)) sending the source generator
    to a root of the source modulus in the destination field."""

    src: FieldCtx
    dst: FieldCtx
    image_of_generator: int

    def __post_init__(self):
        if self.dst.n % self.src.n != 0:
            raise ValueError("destination degree must be a multiple of the source degree")
        if _eval_poly(self.dst, self.src.modulus, self.image_of_generator) != 0:
            raise ValueError("image_of_generator is not a root of the source modulus")


def _eval_poly(ctx: FieldCtx, poly: int, x: int) -> int:
    """Evaluate an F_2[x] polynomial (bitmask) at a field element of ctx."""
    acc = 0
    for i in range(poly.bit_length() - 1, -1, -1):
        acc = ctx.mul(acc, x)
        if (poly >> i) & 1:
            acc ^= 1
    return acc


def find_embedding(src: FieldCtx, dst: FieldCtx) -> Embedding:
    """Embedding via exhaustive root search in the destination field."""
    if dst.n % src.n != 0:
        raise ValueError("destination degree must be a multiple of the source degree")
    for x in dst.elements():
        if _eval_poly(dst, src.modulus, x) == 0:
            return Embedding(src, dst, x)
    raise RuntimeError("no root found; fields are inconsistent")  # unreachable


def embed(e: Embedding, a: int) -> int:
    """Image of a source element under the embedding."""
    acc = 0
    root_pow = 1
    for i in range(e.src.n):
        if (a >> i) & 1:
            acc ^= root_pow
        root_pow = e.dst.mul(root_pow, e.image_of_generator)
    return acc


def subfield_elements(ctx: FieldCtx, u: int) -> List[int]:
    """Elements of the subfield F_{2^u} inside ctx (requires u | ctx.n)."""
    if ctx.n % u != 0:
        raise ValueError("subfield degree must divide the field degree")
    return [x for x in ctx.elements() if ctx.pow(x, 1 << u) == x]


def verify_lin_indep_transfer(n: int, u: int, tup: Sequence[int]) -> bool:
    """Check that F_2-independence in GF(2^n) matches F_{2^u}-independence of
    the embedded tuple in GF(2^(n*u)).  Returns True iff the two agree."""
    if math.gcd(n, u) != 1:
        raise ValueError("n and u must be coprime")
    if len(tup) > n:
        raise ValueError("tuple longer than the field dimension")
    src = make_ctx(n)
    dst = make_ctx(n * u)
    emb = find_embedding(src, dst)
    indep_f2 = is_independent(list(tup))

    images = [embed(emb, a) for a in tup]
    sub = subfield_elements(dst, u)
    dependent = False
    for coeffs in product(sub, repeat=len(images)):
        if all(c == 0 for c in coeffs):
            continue
        acc = 0
        for c, img in zip(coeffs, images):
            acc ^= dst.mul(c, img)
        if acc == 0:
            dependent = True
            break
    indep_subfield = not dependent
    return indep_f2 == indep_subfield
