"""Closed-form predicates and classifications for power functions x^d over
GF(2^n): codimension-1/2/k no-drop criteria, Moore exponent sets, named
families (Gold, Kasami, Welch, ones-run, inverse) and the multiplicative
inverse codimension-2/3 structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from . import linalg, subspaces
from .boolfn import VectorialFunction, degree, power_function
from .errors import CapExceededError, ConsistencyError
from .gf2 import FieldCtx, log_tables, make_ctx
from .scan import scan
from .subspaces import AffineSubspace, TraceEquations, equations_to_subspace

MOORE_MAX_N = 12
Z_SWEEP_MAX_N = 14


@dataclass(frozen=True)
class ExponentProfile:
    """Binary-digit structure of a power-function exponent."""

    n: int
    d: int
    digits: Tuple[int, ...]
    zero_set: frozenset
    weight: int


def profile(n: int, d: int) -> ExponentProfile:
    if not 1 <= d <= (1 << n) - 1:
        raise ValueError(f"exponent must be in [1, 2^n - 1], got {d}")
    digits = tuple((d >> i) & 1 for i in range(n))
    zero_set = frozenset(i for i in range(n) if digits[i] == 0)
    return ExponentProfile(n, d, digits, zero_set, n - len(zero_set))


def frobenius_double(n: int, d: int) -> int:
    """2*d reduced modulo 2^n - 1 to the representatives [1, 2^n - 1]."""
    order = (1 << n) - 1
    e = (2 * d) % order
    return order if e == 0 else e


def codim1_no_drop(p: ExponentProfile) -> bool:
    """x^d keeps its degree on every hyperplane unless d = 2^n - 1."""
    return p.d != (1 << p.n) - 1


def zero_gap_gcd(p: ExponentProfile) -> int:
    """gcd of all pairwise (positive) differences of zero digit positions."""
    u = 0
    zeros = sorted(p.zero_set)
    for i, t1 in enumerate(zeros):
        for t2 in zeros[i + 1 :]:
            u = math.gcd(u, t2 - t1)
    return u


def codim2_no_drop(p: ExponentProfile) -> bool:
    """Exact criterion for no degree-drop space of codimension 2:
    gcd(u, n) = 1 where u is the gcd of zero-position differences."""
    if len(p.zero_set) < 2:
        raise ValueError("codim-2 criterion requires degree <= n - 2")
    return math.gcd(zero_gap_gcd(p), p.n) == 1


def codim_k_sufficient(p: ExponentProfile, k: int) -> bool:
    """Sufficient condition for no codim-k drop space: the zero set contains
    a k-term arithmetic progression mod n with step coprime to n."""
    if not 1 <= k <= p.n - p.weight:
        raise ValueError(f"k must be in [1, n - weight], got {k}")
    zero = p.zero_set
    if k == 1:
        return bool(zero)
    for u in range(1, p.n):
        if math.gcd(u, p.n) != 1:
            continue
        for t in zero:
            if all(((t + u * i) % p.n) in zero for i in range(1, k)):
                return True
    return False


@dataclass
class MooreSetVerdict:
    exponent_set: Tuple[int, ...]
    is_moore: bool
    witness: Optional[Tuple[int, ...]] = None  # independent tuple with det 0


def _moore_determinant(ctx: FieldCtx, exps: Sequence[int], tup: Sequence[int]) -> int:
    """det of the k x k matrix with entries tup[j]^(2^exps[l]), by Gaussian
    elimination over the field."""
    k = len(tup)
    rows = [[ctx.pow(a, 1 << e) for a in tup] for e in exps]
    det = 1
    for col in range(k):
        piv = next((r for r in range(col, k) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
        pivot = rows[col][col]
        det = ctx.mul(det, pivot)
        inv_p = ctx.inv(pivot)
        for r in range(col + 1, k):
            if rows[r][col]:
                factor = ctx.mul(rows[r][col], inv_p)
                for c in range(col, k):
                    rows[r][c] ^= ctx.mul(factor, rows[col][c])
    return det


def _independent_tuples(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """All ordered F_2-independent k-tuples of nonzero elements (full sweep)."""

    def rec(chosen: List[int]):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for a in range(1, 1 << n):
            if linalg.is_independent(chosen + [a]):
                yield from rec(chosen + [a])

    yield from rec([])


def is_moore_exponent_set(
    ctx: FieldCtx, exps: Sequence[int], full_sweep: bool = False
) -> MooreSetVerdict:
    """Check whether the Moore-style determinant is nonzero on every
    F_2-independent tuple.

    By default one representative basis per k-dimensional subspace is tested:
    a change of basis multiplies the determinant by the (nonzero) determinant
    of an F_2 matrix, so the verdict per subspace is basis-independent.
    """
    exps = tuple(sorted(set(int(e) for e in exps)))
    k = len(exps)
    n = ctx.n
    if not 1 <= k <= n:
        raise ValueError("exponent set size must be in [1, n]")
    if n > MOORE_MAX_N:
        raise CapExceededError(f"Moore check capped at n <= {MOORE_MAX_N}")
    if full_sweep:
        tuples = _independent_tuples(n, k)
    else:
        tuples = (
            tuple(sorted(s.basis)) for s in subspaces.enumerate_linear(n, n - k, allow_large=True)
        )
    for tup in tuples:
        if _moore_determinant(ctx, exps, tup) == 0:
            return MooreSetVerdict(exps, False, tup)
    return MooreSetVerdict(exps, True, None)


def codim_k_moore_sufficient(ctx: FieldCtx, p: ExponentProfile, k: int) -> bool:
    """Sufficient condition generalizing the progression criterion: some
    k-subset of the zero positions is a Moore exponent set."""
    if not 1 <= k <= p.n - p.weight:
        raise ValueError(f"k must be in [1, n - weight], got {k}")
    for subset in combinations(sorted(p.zero_set), k):
        if is_moore_exponent_set(ctx, subset).is_moore:
            return True
    return False


def power_drop_lower_bound_check(ctx: FieldCtx, d: int, k: int, allow_large: bool = False) -> bool:
    """Theorem-check harness: every linear codim-k restriction of x^d has
    degree >= weight(d) - k."""
    p = profile(ctx.n, d)
    if p.weight >= ctx.n:
        raise ValueError("requires weight(d) < n")
    if not 1 <= k <= p.weight:
        raise ValueError("requires 1 <= k <= weight(d)")
    f = power_function(ctx, d)
    report = scan(f, k, scope="linear", allow_large=allow_large)
    return report.extremal_degree >= p.weight - k


# --- named families -------------------------------------------------------


@dataclass
class FamilyReport:
    family: str
    n: int
    d: int
    degree: int
    guaranteed_no_drop_codim: Optional[int]
    criterion: str
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "d": self.d,
            "degree": self.degree,
            "guaranteed_no_drop_codim": self.guaranteed_no_drop_codim,
            "theorem_citation": self.criterion,
            "notes": self.notes,
        }


def named_family_report(family: str, n: int, **params) -> FamilyReport:
    """Exponent, degree and the guaranteed no-drop codimension for the named
    power-function families."""
    fam = family.lower()
    if fam == "gold":
        j = params["j"]
        if not 1 <= j < n:
            raise ValueError("Gold requires 1 <= j < n")
        d = 1 + (1 << j)
        if math.gcd(j, n) == 1:
            return FamilyReport(
                "gold", n, d, 2, n - 2,
                "coprime zero-run criterion with step j at codim n-2",
                notes="APN (gcd(j, n) = 1); full degree-stability",
            )
        return FamilyReport(
            "gold", n, d, 2, None,
            "no guarantee: gcd(j, n) > 1",
            notes="not APN; dim-2 degree-drop spaces exist",
        )
    if fam == "kasami":
        i = params["i"]
        if not (1 <= i and 2 * i <= n):
            raise ValueError("Kasami requires 1 <= i and 2i <= n")
        d = (1 << (2 * i)) - (1 << i) + 1
        k = max(i - 1, n - 2 * i)
        return FamilyReport(
            "kasami", n, d, i + 1, k if k >= 1 else None,
            "contiguous zero-run criterion at codim max(i-1, n-2i)",
        )
    if fam == "welch":
        if n % 2 == 0 or n < 5:
            raise ValueError("Welch requires odd n >= 5")
        j = (n - 1) // 2
        d = (1 << j) + 3
        return FamilyReport(
            "welch", n, d, 3, n - 4,
            "coprime zero-run criterion with step (n-1)/2 at codim n-4",
            notes="close to the optimal codim n-3",
        )
    if fam == "inverse":
        d = (1 << n) - 2
        return FamilyReport(
            "inverse", n, d, n - 1, 1,
            "no degree-drop hyperplanes; full degree-stability",
            notes="degree drops on every space of codim >= 2 (dimension bound)",
        )
    if fam in ("onesrun", "ones-run"):
        j, u = params["j"], params["u"]
        if not (1 < j < n):
            raise ValueError("ones-run requires 1 < j < n")
        if math.gcd(u, n) != 1:
            raise ValueError("ones-run requires gcd(u, n) = 1")
        if (j - 1) * u >= n:
            raise ValueError("ones-run exponent exceeds the field size; need (j-1)u < n")
        d = sum(1 << (i * u) for i in range(j))
        return FamilyReport(
            "ones-run", n, d, j, n - j,
            "coprime zero-run criterion with step u at codim n-j",
            notes="full degree-stability",
        )
    raise ValueError(f"unknown family {family!r}")


# --- multiplicative inverse structure --------------------------------------


@dataclass
class InverseCodim2Report:
    n: int
    special_count: int

    def spaces(self, ctx: FieldCtx) -> Iterator[AffineSubspace]:
        """The codim-2 linear spaces {tr(ax) = 0, tr(cax) = 0} with
        c^2 + c + 1 = 0, one canonical subspace per class."""
        if self.special_count == 0:
            return
        c = next(
            x for x in range(2, ctx.size) if ctx.mul(x, x) ^ x ^ 1 == 0
        )
        seen: Set[Tuple] = set()
        for a in range(1, ctx.size):
            ca = ctx.mul(c, a)
            eqs = TraceEquations(ctx, ((a, 0), (ca, 0)))
            A = equations_to_subspace(eqs)
            key = A.linear.basis
            if key not in seen:
                seen.add(key)
                yield A


def inverse_codim2_classification(ctx: FieldCtx) -> InverseCodim2Report:
    """Count (and expose) the codim-2 linear spaces where the inverse
    function's degree drops by 2 instead of 1."""
    n = ctx.n
    if n % 2 == 1:
        return InverseCodim2Report(n, 0)
    return InverseCodim2Report(n, ((1 << n) - 1) // 3)


def _mul_arrays(exp: np.ndarray, log: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise field product of two uint32 arrays via log tables."""
    out = np.zeros_like(a)
    nz = (a != 0) & (b != 0)
    out[nz] = exp[log[a[nz]] + log[b[nz]]]
    return out


def inverse_codim3_z(ctx: FieldCtx) -> int:
    """Number of pairs (d1, d2) with 1, d1, d2 F_2-independent satisfying the
    codim-3 drop-by-3 indicator equation
    d1*d2*(1 + d1 + d2) + d1^2 + d2^2 + (d1*d2)^2 + 1 + d1^4 + d2^4 = 0."""
    n = ctx.n
    if n < 3:
        raise ValueError("requires n >= 3")
    if n > Z_SWEEP_MAX_N:
        raise CapExceededError(f"z sweep capped at n <= {Z_SWEEP_MAX_N}")
    size = ctx.size
    order = ctx.order
    exp_t, log_t = log_tables(ctx)
    exp = np.array(exp_t, dtype=np.uint32)  # length 2*(2^n - 1): no mod needed
    log = np.array([0 if v < 0 else v for v in log_t], dtype=np.uint32)
    sq = np.zeros(size, dtype=np.uint32)
    idx = np.arange(1, size)
    sq[1:] = exp[(2 * log[idx]) % order]
    sq4 = sq[sq]
    d2 = np.arange(size, dtype=np.uint32)
    total = 0
    for d1 in range(2, size):
        # independence of (1, d1, d2): d1 not in {0,1}, d2 not in span{1, d1}
        valid = (d2 != 0) & (d2 != 1) & (d2 != d1) & (d2 != (d1 ^ 1))
        p = _mul_arrays(exp, log, np.full(size, d1, dtype=np.uint32), d2)
        t = np.uint32(1 ^ d1) ^ d2
        lhs = _mul_arrays(exp, log, p, t)
        lhs ^= sq[d1] ^ np.uint32(1) ^ sq4[d1]
        lhs ^= sq[d2] ^ sq[p] ^ sq4[d2]
        total += int(np.count_nonzero((lhs == 0) & valid))
    return total


# expected z(n) for n = 3..12 (used by the reproduction command)
Z_TABLE = {
    3: 24, 4: 0, 5: 0, 6: 24, 7: 168, 8: 336, 9: 528, 10: 840, 11: 1848, 12: 4224,
}
SPECIAL_COUNT_TABLE = {
    3: 1, 4: 0, 5: 0, 6: 9, 7: 127, 8: 510, 9: 1606, 10: 5115, 11: 22517, 12: 102960,
}


def inverse_codim3_special_count(ctx: FieldCtx) -> int:
    """(2^n - 1) * z(n) / 168: the number of codim-3 linear spaces on which
    the inverse function's degree drops by 3.  Division must be exact."""
    z = inverse_codim3_z(ctx)
    num = ctx.order * z
    if num % 168 != 0:
        raise ConsistencyError(
            f"(2^n - 1) * z(n) = {num} is not divisible by 168; implementation bug"
        )
    return num // 168


def affine_nondrop_check(ctx: FieldCtx, k: int, allow_large: bool = False) -> bool:
    """Theorem-check harness: every non-linear affine codim-k coset gives the
    inverse function restriction degree exactly n - k."""
    n = ctx.n
    if not 2 <= k < n:
        raise ValueError("requires 2 <= k < n")
    from .boolfn import inverse_function

    f = inverse_function(ctx)
    expected = n - k
    for A in subspaces.enumerate_affine(n, k, allow_large=allow_large):
        if A.is_linear():
            continue
        d = subspaces.restriction_degree(f.table, sorted(A.linear.basis), A.offset)
        if d != expected:
            return False
    return True
