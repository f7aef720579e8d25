"""Linear algebra over GF(2) on int bitmasks.

Vectors are ints with bit i = coordinate i; a matrix is a list of row masks.
The canonical reduced form used throughout keeps each row's *highest* set bit
as its pivot, rows sorted by descending pivot, and pivot bits cleared from all
other rows.  With this convention, reducing a vector against a basis yields
the integer-minimum representative of its coset.
"""

from __future__ import annotations

import random
from typing import Iterable, List, Optional


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def reduce_vector(v: int, basis: List[int]) -> int:
    """Reduce ``v`` modulo the span of a canonical basis."""
    for b in basis:
        if v & (1 << (b.bit_length() - 1)):
            v ^= b
    return v


def rref(rows: Iterable[int]) -> List[int]:
    """Canonical reduced basis of the span of ``rows`` (zero rows dropped)."""
    basis: List[int] = []
    for row in rows:
        row = reduce_vector(row, basis)
        if row:
            pivot = 1 << (row.bit_length() - 1)
            basis = [b ^ row if b & pivot else b for b in basis]
            basis.append(row)
            basis.sort(reverse=True)
    return basis


def rank(rows: Iterable[int]) -> int:
    return len(rref(rows))


def is_independent(rows: Iterable[int]) -> bool:
    rows = list(rows)
    return rank(rows) == len(rows)


def span(basis: List[int]) -> List[int]:
    """All 2^dim elements of the span, indexed by combination counter."""
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return out


def kernel_basis(rows: List[int], n: int) -> List[int]:
    """Canonical basis of {x in F_2^n : parity(row & x) = 0 for every row}."""
    basis = rref(rows)
    pivot_set = {b.bit_length() - 1 for b in basis}
    out = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = 1 << j
        # canonical rows have zeros in the other pivot columns, so each
        # pivot coordinate is forced directly by the free column j
        for b in basis:
            if (b >> j) & 1:
                v |= 1 << (b.bit_length() - 1)
        out.append(v)
    return rref(out)


def solve(rows: List[int], rhs: List[int], n: int) -> Optional[int]:
    """One solution x of parity(rows[i] & x) = rhs[i], or None if inconsistent."""
    work: List[tuple] = []
    for row, b in zip(rows, rhs):
        cur, val = row, b & 1
        for wrow, wval in work:
            if cur & (1 << (wrow.bit_length() - 1)):
                cur ^= wrow
                val ^= wval
        if cur == 0:
            if val:
                return None
            continue
        pivot = 1 << (cur.bit_length() - 1)
        work = [(wr ^ cur, wv ^ val) if wr & pivot else (wr, wv) for wr, wv in work]
        work.append((cur, val))
        work.sort(key=lambda t: -t[0])
    x = 0
    for wrow, wval in work:
        # canonical: wrow has zeros at the other pivots, so the pivot bit of x
        # is val xor the contribution of the free bits already fixed in x
        if (parity(wrow & x) ^ wval) & 1:
            x ^= 1 << (wrow.bit_length() - 1)
    return x


def apply_matrix(rows: List[int], x: int) -> int:
    """y with bit i = parity(rows[i] & x)."""
    y = 0
    for i, row in enumerate(rows):
        y |= parity(row & x) << i
    return y


def is_invertible(rows: List[int], n: int) -> bool:
    return len(rows) == n and rank(rows) == n


def invert_matrix(rows: List[int], n: int) -> List[int]:
    """Inverse of an invertible n x n bit matrix (rows as masks)."""
    cols = []
    for i in range(n):
        x = solve(rows, [1 if j == i else 0 for j in range(n)], n)
        if x is None:
            raise ValueError("matrix is singular")
        cols.append(x)  # column i of the inverse
    out = [0] * n
    for i, col in enumerate(cols):
        for j in range(n):
            if (col >> j) & 1:
                out[j] |= 1 << i
    return out


def transpose(rows: List[int], n: int) -> List[int]:
    out = [0] * n
    for i, row in enumerate(rows):
        for j in range(n):
            if (row >> j) & 1:
                out[j] |= 1 << i
    return out


def random_invertible(n: int, rng: random.Random) -> List[int]:
    while True:
        rows = [rng.randrange(1, 1 << n) for _ in range(n)]
        if rank(rows) == n:
            return rows
