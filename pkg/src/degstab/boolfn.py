"""Representations of (n,m)-functions F_2^n -> F_2^m.

A function is held as a truth table of 2^n packed outputs (bit i of an entry
is coordinate i).  Conversions to multivariate ANF and, for m = n, to the
univariate polynomial over GF(2^n), plus degree machinery: derivatives, fast
points, the monomial-complement map and affine transforms.

The degree of the identically zero function is NEG_INF, which compares below
every integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence

from . import linalg
from .gf2 import FieldCtx, log_tables, make_ctx, parse_modulus

NEG_INF = float("-inf")


class VectorialFunction:
    """An (n,m)-function as a truth table of packed output bitmasks."""

    __slots__ = ("n", "m", "table")

    def __init__(self, n: int, m: int, table: Sequence[int]):
        if len(table) != 1 << n:
            raise ValueError(f"table length {len(table)} != 2^{n}")
        if any(not 0 <= v < (1 << m) for v in table):
            raise ValueError("table entry out of range for m output bits")
        self.n = n
        self.m = m
        self.table = list(table)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorialFunction)
            and self.n == other.n
            and self.m == other.m
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.n, self.m, tuple(self.table)))

    def __repr__(self):
        return f"VectorialFunction(n={self.n}, m={self.m})"

    def coordinate(self, i: int) -> "VectorialFunction":
        return VectorialFunction(self.n, 1, [(v >> i) & 1 for v in self.table])

    def is_constant(self) -> bool:
        return all(v == self.table[0] for v in self.table)


@dataclass
class AnfForm:
    """Sparse multivariate ANF: monomial mask -> nonzero coefficient in F_2^m."""

    n: int
    m: int
    coeffs: Dict[int, int]

    def degree(self):
        if not self.coeffs:
            return NEG_INF
        return max(bin(mask).count("1") for mask in self.coeffs)


@dataclass
class UnivariateForm:
    """Coefficients c_0..c_{2^n-1} of an (n,n)-function over GF(2^n)."""

    ctx: FieldCtx
    coeffs: List[int]

    def degree(self):
        deg = NEG_INF
        for j, c in enumerate(self.coeffs):
            if c:
                w = bin(j).count("1")
                if w > deg:
                    deg = w
        return deg


def mobius_transform(table: List[int], n: int) -> List[int]:
    """In-place XOR Moebius/zeta transform (involution); returns its input."""
    size = 1 << n
    h = 1
    while h < size:
        for t0 in range(0, size, h << 1):
            for t in range(t0 + h, t0 + (h << 1)):
                table[t] ^= table[t - h]
        h <<= 1
    return table


def table_to_anf(f: VectorialFunction) -> AnfForm:
    work = mobius_transform(list(f.table), f.n)
    return AnfForm(f.n, f.m, {mask: c for mask, c in enumerate(work) if c})


def anf_to_table(a: AnfForm) -> VectorialFunction:
    work = [0] * (1 << a.n)
    for mask, c in a.coeffs.items():
        work[mask] = c
    mobius_transform(work, a.n)
    return VectorialFunction(a.n, a.m, work)


def degree(f: VectorialFunction):
    """Algebraic degree: max monomial weight over all coordinates."""
    work = mobius_transform(list(f.table), f.n)
    deg = NEG_INF
    for mask, c in enumerate(work):
        if c:
            w = bin(mask).count("1")
            if w > deg:
                deg = w
    return deg


def univariate_to_table(u: UnivariateForm) -> VectorialFunction:
    ctx = u.ctx
    n = ctx.n
    if len(u.coeffs) != ctx.size:
        raise ValueError("coefficient vector must have 2^n entries")
    exp, log = log_tables(ctx)
    order = ctx.order
    table = [0] * ctx.size
    table[0] = u.coeffs[0]
    nonzero = [(j, c, log[c]) for j, c in enumerate(u.coeffs) if c]
    for x in range(1, ctx.size):
        lx = log[x]
        acc = 0
        for j, c, lc in nonzero:
            if j == 0:
                acc ^= c
            else:
                acc ^= exp[(lc + j * lx) % order]
        table[x] = acc
    return VectorialFunction(n, n, table)


def table_to_univariate(f: VectorialFunction, ctx: FieldCtx) -> UnivariateForm:
    """The unique interpolating polynomial of degree <= 2^n - 1.

    Uses c_j = sum_{a != 0} f(a) a^(-j) for 1 <= j <= 2^n - 2, with
    c_0 = f(0) and c_{2^n-1} = sum over all a of f(a).
    """
    if f.n != f.m or f.n != ctx.n:
        raise ValueError("univariate form requires n = m = ctx.n")
    exp, log = log_tables(ctx)
    order = ctx.order
    coeffs = [0] * ctx.size
    coeffs[0] = f.table[0]
    # group table values by discrete log of the input
    vals = [(s, f.table[exp[s]], log[f.table[exp[s]]]) for s in range(order)]
    for j in range(1, order):
        acc = 0
        for s, v, lv in vals:
            if v:
                acc ^= exp[(lv - j * s) % order]
        coeffs[j] = acc
    total = 0
    for v in f.table:
        total ^= v
    coeffs[order] = total
    return UnivariateForm(ctx, coeffs)


def power_function(ctx: FieldCtx, d: int) -> VectorialFunction:
    """The power function x^d over GF(2^n) as a truth table (0^d = 0 for d >= 1)."""
    if not 1 <= d <= ctx.order:
        raise ValueError(f"exponent must be in [1, 2^n - 1], got {d}")
    exp, log = log_tables(ctx)
    order = ctx.order
    table = [0] * ctx.size
    for x in range(1, ctx.size):
        table[x] = exp[(d * log[x]) % order]
    return VectorialFunction(ctx.n, ctx.n, table)


def inverse_function(ctx: FieldCtx) -> VectorialFunction:
    return power_function(ctx, ctx.order - 1)


def derivative(f: VectorialFunction, a: int) -> VectorialFunction:
    """Discrete derivative x -> f(x+a) + f(x); requires a != 0."""
    if a == 0 or a >= (1 << f.n):
        raise ValueError("derivative direction must be a nonzero vector")
    t = f.table
    return VectorialFunction(f.n, f.m, [t[x ^ a] ^ t[x] for x in range(len(t))])


def higher_derivative(f: VectorialFunction, dirs: Iterable[int]) -> VectorialFunction:
    dirs = list(dirs)
    if not linalg.is_independent(dirs):
        raise ValueError("derivative directions must be linearly independent")
    g = f
    for a in dirs:
        g = derivative(g, a)
    return g


def fast_points(f: VectorialFunction) -> set:
    """All nonzero a with deg(D_a f) < deg(f) - 1."""
    if f.is_constant():
        raise ValueError("fast points are undefined for constant functions")
    threshold = degree(f) - 1
    out = set()
    for a in range(1, 1 << f.n):
        if degree(derivative(f, a)) < threshold:
            out.add(a)
    return out


def is_homogeneous(f: VectorialFunction) -> bool:
    anf = table_to_anf(f)
    if not anf.coeffs:
        return True
    r = anf.degree()
    return all(bin(mask).count("1") == r for mask in anf.coeffs)


def complement(f: VectorialFunction) -> VectorialFunction:
    """Monomial-wise complement of a homogeneous function."""
    anf = table_to_anf(f)
    r = anf.degree()
    if anf.coeffs and any(bin(mask).count("1") != r for mask in anf.coeffs):
        raise ValueError("complement is defined only for homogeneous functions")
    full = (1 << f.n) - 1
    return anf_to_table(AnfForm(f.n, f.m, {full ^ mask: c for mask, c in anf.coeffs.items()}))


def homogeneous_part(f: VectorialFunction, r: int) -> VectorialFunction:
    anf = table_to_anf(f)
    kept = {mask: c for mask, c in anf.coeffs.items() if bin(mask).count("1") == r}
    return anf_to_table(AnfForm(f.n, f.m, kept))


def affine_transform(
    f: VectorialFunction,
    M: Sequence[int],
    a: int = 0,
    N: Sequence[int] | None = None,
    b: int = 0,
) -> VectorialFunction:
    """x -> N * f(Mx + a) + b with invertible bit matrices M (n x n) and N (m x m)."""
    M = list(M)
    if not linalg.is_invertible(M, f.n):
        raise ValueError("input matrix M is singular")
    if N is None:
        N = [1 << i for i in range(f.m)]
    else:
        N = list(N)
        if not linalg.is_invertible(N, f.m):
            raise ValueError("output matrix N is singular")
    table = [0] * (1 << f.n)
    for x in range(1 << f.n):
        y = f.table[linalg.apply_matrix(M, x) ^ a]
        table[x] = linalg.apply_matrix(N, y) ^ b
    return VectorialFunction(f.n, f.m, table)


# --- file formats ---------------------------------------------------------


def write_table(f: VectorialFunction) -> str:
    """Truth-table format: header "n m", then 2^n hex outputs in input order."""
    lines = [f"{f.n} {f.m}"]
    lines += [format(v, "x") for v in f.table]
    return "\n".join(lines) + "\n"


def read_table(text: str) -> VectorialFunction:
    parts = text.split()
    if len(parts) < 2:
        raise ValueError("truth-table file: missing header")
    n, m = int(parts[0]), int(parts[1])
    vals = [int(tok, 16) for tok in parts[2:]]
    if len(vals) != 1 << n:
        raise ValueError(f"truth-table file: expected {1 << n} values, got {len(vals)}")
    return VectorialFunction(n, m, vals)


def write_univariate(u: UnivariateForm) -> str:
    """Univariate format: header "n modulus_hex", then sparse "j:coeff_hex" pairs."""
    lines = [f"{u.ctx.n} {u.ctx.modulus_hex()}"]
    lines += [f"{j}:{format(c, 'x')}" for j, c in enumerate(u.coeffs) if c]
    return "\n".join(lines) + "\n"


def read_univariate(text: str) -> UnivariateForm:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("univariate file: empty")
    n_str, mod_str = lines[0].split()
    ctx = make_ctx(int(n_str), parse_modulus(mod_str))
    coeffs = [0] * ctx.size
    for ln in lines[1:]:
        j_str, c_str = ln.split(":")
        j = int(j_str)
        if not 0 <= j < ctx.size:
            raise ValueError(f"univariate file: exponent {j} out of range")
        coeffs[j] = int(c_str, 16)
    return UnivariateForm(ctx, coeffs)
