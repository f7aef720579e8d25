"""Linear and affine subspaces of F_2^n.

Subspaces are kept in a canonical reduced row-echelon form where each basis
row's pivot is its highest set bit; affine offsets are reduced to the
integer-minimum coset representative.  Enumeration is indexable (cells by
pivot-column set, free bits as a binary counter) so scans can be partitioned
into disjoint index ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from . import linalg
from .boolfn import NEG_INF, VectorialFunction, degree
from .errors import CapExceededError
from .gf2 import FieldCtx

ENUM_MAX_N_SMALL_CODIM = 16  # codim <= 3
ENUM_MAX_N_ANY_CODIM = 10


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    """Number of k-dimensional subspaces of F_q^n (exact integer)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class LinearSubspace:
    """Span of canonical RREF basis rows (descending pivots)."""

    n: int
    basis: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.n - len(self.basis)

    def contains(self, x: int) -> bool:
        return linalg.reduce_vector(x, list(self.basis)) == 0

    def elements(self) -> List[int]:
        return linalg.span(list(self.basis))


@dataclass(frozen=True)
class AffineSubspace:
    """Coset offset + linear, with the offset canonicalized to the minimum
    coset representative (pivot bits cleared)."""

    linear: LinearSubspace
    offset: int

    @property
    def n(self) -> int:
        return self.linear.n

    @property
    def dim(self) -> int:
        return self.linear.dim

    @property
    def codim(self) -> int:
        return self.linear.codim

    def is_linear(self) -> bool:
        return self.offset == 0

    def contains(self, x: int) -> bool:
        return self.linear.contains(x ^ self.offset)

    def elements(self) -> List[int]:
        return [self.offset ^ e for e in self.linear.elements()]


def linear_subspace(n: int, rows: Sequence[int]) -> LinearSubspace:
    return LinearSubspace(n, tuple(linalg.rref(rows)))


def affine_subspace(n: int, rows: Sequence[int], offset: int) -> AffineSubspace:
    basis = linalg.rref(rows)
    return AffineSubspace(LinearSubspace(n, tuple(basis)), linalg.reduce_vector(offset, basis))


def whole_space(n: int) -> AffineSubspace:
    return affine_subspace(n, [1 << i for i in range(n)], 0)


# --- enumeration ----------------------------------------------------------


@lru_cache(maxsize=None)
def _cells(n: int, dim: int) -> Tuple[tuple, ...]:
    """Schubert cells for dim-dimensional subspaces: (pivots desc, free
    positions per row, cumulative start index)."""
    cells = []
    start = 0
    for pivots in combinations(range(n - 1, -1, -1), dim):
        pivot_set = set(pivots)
        free = tuple(
            tuple(j for j in range(p - 1, -1, -1) if j not in pivot_set) for p in pivots
        )
        nfree = sum(len(fp) for fp in free)
        cells.append((pivots, free, start))
        start += 1 << nfree
    return tuple(cells)


def _check_caps(n: int, codim: int, allow_large: bool) -> None:
    if not 0 <= codim <= n:
        raise ValueError(f"codimension must be in 0..{n}, got {codim}")
    if allow_large:
        return
    if codim <= 3 and n <= ENUM_MAX_N_SMALL_CODIM:
        return
    if n <= ENUM_MAX_N_ANY_CODIM:
        return
    raise CapExceededError(
        f"enumeration of codim-{codim} subspaces of F_2^{n} exceeds the caps "
        f"(codim <= 3 needs n <= {ENUM_MAX_N_SMALL_CODIM}, otherwise n <= "
        f"{ENUM_MAX_N_ANY_CODIM}); pass allow_large=True to override"
    )


def count_linear(n: int, codim: int) -> int:
    return gaussian_binomial(n, codim, 2)


def count_affine(n: int, codim: int) -> int:
    return (1 << codim) * gaussian_binomial(n, codim, 2)


def subspace_basis_at(n: int, dim: int, index: int) -> Tuple[int, ...]:
    """Decode the canonical basis of the index-th dim-dimensional subspace."""
    cells = _cells(n, dim)
    lo, hi = 0, len(cells)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if cells[mid][2] <= index:
            lo = mid
        else:
            hi = mid
    pivots, free, start = cells[lo]
    counter = index - start
    rows = []
    for p, fp in zip(pivots, free):
        row = 1 << p
        for j in fp:
            if counter & 1:
                row |= 1 << j
            counter >>= 1
        rows.append(row)
    return tuple(rows)


def enumerate_linear(
    n: int,
    codim: int,
    start: int = 0,
    stop: int | None = None,
    allow_large: bool = False,
) -> Iterator[LinearSubspace]:
    """Each codim-k subspace exactly once, in canonical cell/counter order."""
    _check_caps(n, codim, allow_large)
    dim = n - codim
    total = count_linear(n, codim)
    if stop is None or stop > total:
        stop = total
    for index in range(start, stop):
        yield LinearSubspace(n, subspace_basis_at(n, dim, index))


def enumerate_affine(
    n: int,
    codim: int,
    start: int = 0,
    stop: int | None = None,
    allow_large: bool = False,
) -> Iterator[AffineSubspace]:
    """Each affine codim-k space exactly once: 2^k canonical cosets per
    linear space.  Index = linear_index * 2^k + offset_counter."""
    _check_caps(n, codim, allow_large)
    dim = n - codim
    per = 1 << codim
    total = count_linear(n, codim) * per
    if stop is None or stop > total:
        stop = total
    index = start
    while index < stop:
        lin_idx, off_idx = divmod(index, per)
        basis = subspace_basis_at(n, dim, lin_idx)
        lin = LinearSubspace(n, basis)
        pivot_set = {b.bit_length() - 1 for b in basis}
        nonpivot = [j for j in range(n) if j not in pivot_set]
        while off_idx < per and index < stop:
            offset = 0
            c = off_idx
            for j in nonpivot:
                if c & 1:
                    offset |= 1 << j
                c >>= 1
            yield AffineSubspace(lin, offset)
            off_idx += 1
            index += 1


# --- trace-equation form --------------------------------------------------


@dataclass(frozen=True)
class TraceEquations:
    """System tr(a_i * x) + eps_i = 0 with F_2-independent a_i."""

    ctx: FieldCtx
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not linalg.is_independent([a for a, _ in self.pairs]):
            raise ValueError("trace-equation coefficients must be independent")


@lru_cache(maxsize=None)
def _trace_form_matrix(ctx: FieldCtx) -> Tuple[int, ...]:
    """Row i = bit vector of the linear form x -> tr(2^i * x) over the
    polynomial basis (bit j = tr(2^i * 2^j))."""
    rows = []
    for i in range(ctx.n):
        row = 0
        for j in range(ctx.n):
            if ctx.trace(ctx.mul(1 << i, 1 << j)):
                row |= 1 << j
        rows.append(row)
    return tuple(rows)


def trace_form_vector(ctx: FieldCtx, a: int) -> int:
    """Bit vector v with v . x = tr(a * x) for all x."""
    mat = _trace_form_matrix(ctx)
    v = 0
    i = 0
    while a:
        if a & 1:
            v ^= mat[i]
        a >>= 1
        i += 1
    return v


def equations_to_subspace(eqs: TraceEquations) -> AffineSubspace:
    """Solution coset of the trace equations; codimension = equation count."""
    ctx = eqs.ctx
    n = ctx.n
    rows = [trace_form_vector(ctx, a) for a, _ in eqs.pairs]
    rhs = [eps for _, eps in eqs.pairs]
    if not linalg.is_independent(rows):
        raise ValueError("trace forms are dependent")  # cannot happen: a -> v_a bijective
    x0 = linalg.solve(rows, rhs, n)
    assert x0 is not None
    kernel = linalg.kernel_basis(rows, n)
    return affine_subspace(n, kernel, x0)


def subspace_to_equations(A: AffineSubspace, ctx: FieldCtx) -> TraceEquations:
    """Trace equations whose solution set is exactly A (round-trip identity)."""
    if ctx.n != A.n:
        raise ValueError("field degree must match the ambient dimension")
    n = ctx.n
    normals = linalg.kernel_basis(list(A.linear.basis), n)
    mat = list(_trace_form_matrix(ctx))
    pairs = []
    for w in normals:
        # find a with v_a = w: a's bits solve sum_i a_i * mat[i] = w
        a = 0
        target = w
        # mat as a matrix acting on a: column space solve via transpose trick
        cols = linalg.transpose(mat, n)
        a = linalg.solve(cols, [(target >> j) & 1 for j in range(n)], n)
        assert a is not None  # trace form is nondegenerate
        eps = linalg.parity(w & A.offset)
        pairs.append((a, eps))
    return TraceEquations(ctx, tuple(pairs))


# --- restriction ----------------------------------------------------------


def _coset_addresses(basis: Sequence[int], offset: int) -> List[int]:
    """Addresses of the coset points indexed by the combination counter t:
    point(t) = offset ^ XOR of basis[i] over set bits of t."""
    addrs = [offset]
    for b in basis:
        addrs += [x ^ b for x in addrs]
    return addrs


def restriction_basis(A: AffineSubspace) -> List[int]:
    """Deterministic parameterization basis: canonical rows, ascending pivot."""
    return sorted(A.linear.basis)


def restrict(f: VectorialFunction, A: AffineSubspace) -> VectorialFunction:
    """f restricted to A as a function of dim(A) variables over the canonical
    basis; the degree does not depend on the parameterization."""
    basis = restriction_basis(A)
    addrs = _coset_addresses(basis, A.offset)
    return VectorialFunction(A.dim, f.m, [f.table[x] for x in addrs])


_POPCOUNT_CACHE: dict = {}


def _popcounts(dim: int) -> List[int]:
    pc = _POPCOUNT_CACHE.get(dim)
    if pc is None:
        pc = [bin(t).count("1") for t in range(1 << dim)]
        _POPCOUNT_CACHE[dim] = pc
    return pc


def restriction_degree(table: Sequence[int], basis: Sequence[int], offset: int):
    """Degree of the restriction of a packed truth table to offset + span(basis).

    Fast path used by scans: builds the restricted table, runs the Moebius
    transform in place and takes the max weight of a nonzero coefficient.
    """
    sub = [0] * (1 << len(basis))
    addr = [0] * len(sub)
    sub[0] = table[offset]
    addr[0] = offset
    size = 1
    for b in basis:
        for t in range(size):
            a = addr[t] ^ b
            addr[size + t] = a
            sub[size + t] = table[a]
        size <<= 1
    h = 1
    while h < size:
        for t0 in range(0, size, h << 1):
            for t in range(t0 + h, t0 + (h << 1)):
                sub[t] ^= sub[t - h]
        h <<= 1
    pc = _popcounts(len(basis))
    deg = NEG_INF
    for t in range(size - 1, -1, -1):
        if sub[t]:
            w = pc[t]
            if w > deg:
                deg = w
    return deg


def indicator_product_degree(f: VectorialFunction, A: AffineSubspace):
    """Degree of 1_A * f as an n-variable function."""
    table = [f.table[x] if A.contains(x) else 0 for x in range(1 << f.n)]
    return degree(VectorialFunction(f.n, f.m, table))


def serialize_subspace(A: AffineSubspace) -> str:
    rows = ",".join(format(r, "#x") for r in A.linear.basis)
    return f"codim {A.codim}; rows {rows}; offset {A.offset:#x}"


def parse_subspace(text: str, n: int) -> AffineSubspace:
    parts = [p.strip() for p in text.split(";")]
    rows_part = next(p for p in parts if p.startswith("rows"))
    off_part = next(p for p in parts if p.startswith("offset"))
    rows = [int(tok, 16) for tok in rows_part[len("rows"):].strip().split(",") if tok]
    offset = int(off_part[len("offset"):].strip(), 16)
    return affine_subspace(n, rows, offset)
