"""Exact big-integer counts of homogeneous (n,m)-functions by degree-drop
hyperplane structure and by fast points, the Gaussian-binomial inversion
round-trip, and a brute-force enumeration oracle at small parameters.

A homogeneous degree-r function is identified with its coefficient assignment:
one F_2^m value per weight-r monomial mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence

from . import linalg
from .errors import CapExceededError
from .subspaces import gaussian_binomial

BRUTE_FORCE_MAX_BITS = 24


@dataclass(frozen=True)
class CountQuery:
    n: int
    m: int
    r: int
    j: Optional[int] = None
    homogeneous: bool = True

    def validate(self, fast_mode: bool = False) -> None:
        if not 1 <= self.r <= self.n:
            raise ValueError(f"require 1 <= r <= n, got r={self.r}, n={self.n}")
        if self.m < 1:
            raise ValueError("require m >= 1")
        if self.j is not None:
            hi = (self.n - self.r) if fast_mode else self.r
            if not 0 <= self.j <= hi:
                raise ValueError(f"require 0 <= j <= {hi}, got j={self.j}")


def _nonhomogeneous_multiplier(n: int, m: int, r: int) -> int:
    """Number of ways to attach lower-degree terms: 2^(m * sum_{d<r} C(n,d))."""
    return 1 << (m * sum(comb(n, d) for d in range(r)))


def count_no_drop_hyperplane(q: CountQuery) -> int:
    """Homogeneous (n,m)-functions of degree r with no degree-drop hyperplane,
    by inclusion-exclusion over the dimension of the drop-direction space."""
    q.validate()
    n, m, r = q.n, q.m, q.r
    total = 0
    for i in range(r + 1):
        term = (1 << (i * (i - 1) // 2)) * gaussian_binomial(n, i, 2)
        term *= (1 << (m * comb(n - i, r - i))) - 1
        total += -term if i & 1 else term
    if total < 0:
        raise AssertionError("inclusion-exclusion produced a negative count")
    if not q.homogeneous:
        total *= _nonhomogeneous_multiplier(n, m, r)
    return total


def count_exact_drop_dimension(q: CountQuery) -> int:
    """Homogeneous (n,m)-functions of degree r whose drop-direction space has
    dimension exactly j."""
    if q.j is None:
        raise ValueError("exact-dimension count requires j")
    q.validate()
    n, m, r, j = q.n, q.m, q.r, q.j
    total = 0
    for i in range(r - j + 1):
        term = (1 << (i * (i - 1) // 2)) * gaussian_binomial(n - j, i, 2)
        term *= (1 << (m * comb(n - j - i, r - j - i))) - 1
        total += -term if i & 1 else term
    total *= gaussian_binomial(n, j, 2)
    if total < 0:
        raise AssertionError("inclusion-exclusion produced a negative count")
    if not q.homogeneous:
        total *= _nonhomogeneous_multiplier(n, m, r)
    return total


def count_no_fast_points(q: CountQuery) -> int:
    """Homogeneous (n,m)-functions of degree r with no fast point; equals the
    no-drop-hyperplane count at complementary degree n - r."""
    if not 1 <= q.r <= q.n - 1:
        raise ValueError("fast-point counts require 1 <= r <= n - 1")
    return count_no_drop_hyperplane(
        CountQuery(q.n, q.m, q.n - q.r, homogeneous=q.homogeneous)
    )


def count_exact_fast_dimension(q: CountQuery) -> int:
    """Homogeneous (n,m)-functions of degree r whose fast-point space has
    dimension exactly j."""
    if not 1 <= q.r <= q.n - 1:
        raise ValueError("fast-point counts require 1 <= r <= n - 1")
    return count_exact_drop_dimension(
        CountQuery(q.n, q.m, q.n - q.r, j=q.j, homogeneous=q.homogeneous)
    )


# --- brute-force census oracle ---------------------------------------------


def _weight_r_masks(n: int, r: int) -> List[int]:
    return [mask for mask in range(1 << n) if bin(mask).count("1") == r]


def _drop_condition_rows(n: int, r: int, monomials: Sequence[int], a: int) -> List[int]:
    """Rows (bitmasks over monomial indices) of the linear system on a
    coordinate's coefficients that says: the hyperplane {x : a.x = 0} drops the
    degree.  Substituting x_p = sum of the other supported variables kills the
    top part iff every remaining weight-r monomial's coefficient vanishes."""
    index = {mask: i for i, mask in enumerate(monomials)}
    p = a.bit_length() - 1
    pbit = 1 << p
    others = a ^ pbit
    rows = []
    for target in monomials:
        if target & pbit:
            continue
        row = 1 << index[target]
        jbits = target & others
        while jbits:
            jb = jbits & -jbits
            jbits ^= jb
            row ^= 1 << index[(target ^ jb) | pbit]
        rows.append(row)
    return rows


def _fast_condition_rows(n: int, r: int, monomials: Sequence[int], a: int) -> List[int]:
    """Rows of the system saying a is a fast point: the weight-(r-1) part of
    the derivative along a vanishes."""
    index = {mask: i for i, mask in enumerate(monomials)}
    rows = []
    for target in _weight_r_masks(n, r - 1):
        row = 0
        ibits = a & ~target
        while ibits:
            ib = ibits & -ibits
            ibits ^= ib
            row ^= 1 << index[target | ib]
        if row:
            rows.append(row)
    return rows


def _subspace_members(basis: Sequence[int]) -> List[int]:
    members = [0]
    for b in basis:
        members += [v ^ b for v in members]
    return members


def brute_force_count(n: int, m: int, r: int, mode: str) -> Dict[int, int]:
    """Census over all nonzero homogeneous (n,m)-functions of degree r:
    histogram of the dimension j of the drop-direction space (mode
    "drop-hyperplanes") or of the fast-point space (mode "fast-points")."""
    if mode not in ("drop-hyperplanes", "fast-points"):
        raise ValueError("mode must be 'drop-hyperplanes' or 'fast-points'")
    if not 1 <= r <= n:
        raise ValueError("require 1 <= r <= n")
    if mode == "fast-points" and r == n:
        raise ValueError("fast points are defined for degree <= n - 1")
    monomials = _weight_r_masks(n, r)
    M = len(monomials)
    bits = m * M
    if bits > BRUTE_FORCE_MAX_BITS:
        raise CapExceededError(
            f"census needs 2^{bits} functions; cap is 2^{BRUTE_FORCE_MAX_BITS}"
        )
    rows_of = _drop_condition_rows if mode == "drop-hyperplanes" else _fast_condition_rows
    # member[c] = bitmask over directions a (bit a-1) whose condition c satisfies
    member = [0] * (1 << M)
    for a in range(1, 1 << n):
        rows = rows_of(n, r, monomials, a)
        kernel = linalg.kernel_basis(rows, M)
        abit = 1 << (a - 1)
        for c in _subspace_members(kernel):
            member[c] |= abit
    hist: Dict[int, int] = {}
    coord_mask = (1 << M) - 1
    for v in range(1, 1 << bits):
        acc = -1
        vv = v
        for _ in range(m):
            acc &= member[vv & coord_mask]
            vv >>= M
        j = (bin(acc & ((1 << ((1 << n) - 1)) - 1)).count("1") + 1).bit_length() - 1
        hist[j] = hist.get(j, 0) + 1
    return hist


# --- Gaussian-binomial inversion --------------------------------------------


def inversion_transform(S: Sequence[int], n_max: int, q: int = 2) -> List[int]:
    """T(n) = sum_{k=0}^{n} (-1)^k q^(k(k-1)/2) [n k]_q S(n-k) for n <= n_max."""
    out = []
    for n in range(n_max + 1):
        t = 0
        for k in range(n + 1):
            term = q ** (k * (k - 1) // 2) * gaussian_binomial(n, k, q) * S[n - k]
            t += -term if k & 1 else term
        out.append(t)
    return out


def inversion_lemma_check(S: Sequence[int], n_max: int, q: int = 2) -> bool:
    """Round-trip: recover S(n) = sum_k [n k]_q T(k) from the transform."""
    if len(S) <= n_max:
        raise ValueError("sequence shorter than n_max + 1")
    T = inversion_transform(S, n_max, q)
    for n in range(n_max + 1):
        s = sum(gaussian_binomial(n, k, q) * T[k] for k in range(n + 1))
        if s != S[n]:
            return False
    return True
