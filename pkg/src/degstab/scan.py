"""Degree-drop detection and exhaustive per-codimension scans.

A scan walks every linear (or affine) subspace of a given codimension,
computes the degree of the restriction and histograms the results, keeping
the subspaces that attain the minimum degree.  Scans can be partitioned into
disjoint index ranges and merged deterministically, so a multi-worker run is
bit-identical to the sequential one.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg, subspaces
from .boolfn import (
    NEG_INF,
    VectorialFunction,
    complement,
    degree,
    derivative,
    fast_points,
    higher_derivative,
    homogeneous_part,
)
from .errors import CapExceededError
from .subspaces import (
    AffineSubspace,
    LinearSubspace,
    affine_subspace,
    count_affine,
    count_linear,
    enumerate_affine,
    enumerate_linear,
    restriction_degree,
    serialize_subspace,
)

DEFAULT_EXTREMAL_LIMIT = 1000


@dataclass
class ScanReport:
    """Histogram of restriction degrees over all scanned subspaces."""

    n: int
    m: int
    codim: int
    scope: str  # "linear" or "affine"
    histogram: Dict[object, int]
    extremal: List[AffineSubspace]
    extremal_degree: object
    truncated: bool = False

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "codim": self.codim,
            "scope": self.scope,
            "histogram": {
                ("-inf" if d == NEG_INF else str(d)): c
                for d, c in sorted(self.histogram.items(), key=lambda kv: (kv[0] == NEG_INF, kv[0]))
            },
            "extremal_degree": "-inf" if self.extremal_degree == NEG_INF else self.extremal_degree,
            "extremal": [serialize_subspace(A) for A in self.extremal],
            "truncated": self.truncated,
        }


def is_degree_drop(f: VectorialFunction, A: AffineSubspace) -> bool:
    """True iff deg(f|_A) < deg(f)."""
    if f.is_constant():
        raise ValueError("degree-drop is undefined for constant functions")
    basis = sorted(A.linear.basis)
    return restriction_degree(f.table, basis, A.offset) < degree(f)


def _scan_range(
    table: Sequence[int], n: int, codim: int, scope: str, start: int, stop: int
) -> Tuple[Counter, object, List[int]]:
    """Scan subspace indices [start, stop); returns (histogram, min degree,
    indices attaining the min)."""
    hist: Counter = Counter()
    best = None
    best_idx: List[int] = []
    if scope == "linear":
        it = enumerate_linear(n, codim, start, stop, allow_large=True)
        spaces = ((idx, sorted(s.basis), 0) for idx, s in zip(range(start, stop), it))
    else:
        it = enumerate_affine(n, codim, start, stop, allow_large=True)
        spaces = ((idx, sorted(s.linear.basis), s.offset) for idx, s in zip(range(start, stop), it))
    for idx, basis, offset in spaces:
        d = restriction_degree(table, basis, offset)
        hist[d] += 1
        if best is None or d < best:
            best = d
            best_idx = [idx]
        elif d == best:
            best_idx.append(idx)
    return hist, best, best_idx


def _subspace_at(n: int, codim: int, scope: str, index: int) -> AffineSubspace:
    if scope == "linear":
        basis = subspaces.subspace_basis_at(n, n - codim, index)
        return AffineSubspace(LinearSubspace(n, basis), 0)
    per = 1 << codim
    lin_idx, off_idx = divmod(index, per)
    basis = subspaces.subspace_basis_at(n, n - codim, lin_idx)
    pivot_set = {b.bit_length() - 1 for b in basis}
    offset = 0
    c = off_idx
    for j in range(n):
        if j not in pivot_set:
            if c & 1:
                offset |= 1 << j
            c >>= 1
    return AffineSubspace(LinearSubspace(n, basis), offset)


def scan(
    f: VectorialFunction,
    codim: int,
    scope: str = "linear",
    workers: int = 1,
    extremal_limit: int = DEFAULT_EXTREMAL_LIMIT,
    allow_large: bool = False,
) -> ScanReport:
    """Full histogram of restriction degrees at the given codimension."""
    if scope not in ("linear", "affine"):
        raise ValueError("scope must be 'linear' or 'affine'")
    n = f.n
    subspaces._check_caps(n, codim, allow_large)
    total = count_linear(n, codim) if scope == "linear" else count_affine(n, codim)
    if workers <= 1 or total < 4096:
        hist, best, best_idx = _scan_range(f.table, n, codim, scope, 0, total)
    else:
        chunk = (total + workers * 4 - 1) // (workers * 4)
        ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
        hist = Counter()
        best = None
        best_idx = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_scan_range, f.table, n, codim, scope, s, e) for s, e in ranges
            ]
            for fut in futures:  # merge in submission (index) order: deterministic
                h, b, idx = fut.result()
                hist.update(h)
                if b is not None and (best is None or b < best):
                    best = b
                    best_idx = list(idx)
                elif b == best:
                    best_idx.extend(idx)
    truncated = len(best_idx) > extremal_limit
    extremal = [
        _subspace_at(n, codim, scope, i) for i in best_idx[:extremal_limit]
    ]
    return ScanReport(
        n=n,
        m=f.m,
        codim=codim,
        scope=scope,
        histogram=dict(hist),
        extremal=extremal,
        extremal_degree=best,
        truncated=truncated,
    )


# --- hyperplane direction space V_F ---------------------------------------


@dataclass
class HyperplaneDropSpace:
    """The linear space {0} plus all a whose hyperplane {x : a.x = 0} is a
    degree-drop hyperplane."""

    n: int
    basis: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, a: int) -> bool:
        return linalg.reduce_vector(a, list(self.basis)) == 0


def drop_hyperplane_directions(f: VectorialFunction) -> set:
    """All nonzero a with {x : a.x = 0} a degree-drop hyperplane of f."""
    if f.is_constant():
        raise ValueError("degree-drop is undefined for constant functions")
    n = f.n
    deg_f = degree(f)
    table = f.table
    out = set()
    for a in range(1, 1 << n):
        basis = linalg.kernel_basis([a], n)
        if restriction_degree(table, sorted(basis), 0) < deg_f:
            out.add(a)
    return out


def hyperplane_drop_space(f: VectorialFunction) -> HyperplaneDropSpace:
    dirs = drop_hyperplane_directions(f)
    basis = linalg.rref(sorted(dirs))
    if len(dirs) + 1 != 1 << len(basis):
        raise AssertionError("degree-drop hyperplane directions are not a linear space")
    return HyperplaneDropSpace(f.n, tuple(basis))


# --- verdicts -------------------------------------------------------------


def full_stability(f: VectorialFunction, workers: int = 1, allow_large: bool = False) -> bool:
    """True iff no affine space of dimension deg(f) is a degree-drop space.

    Linear spaces suffice for the no-drop question (an affine coset keeps the
    full degree exactly when its direction space does), so only linear spaces
    of codimension n - deg(f) are scanned.
    """
    r = degree(f)
    if not isinstance(r, int) or r < 1:
        raise ValueError("full stability requires degree >= 1")
    codim = f.n - r
    if codim == 0:
        return True
    report = scan(f, codim, scope="linear", workers=workers, allow_large=allow_large)
    return report.extremal_degree == r


def is_apn(f: VectorialFunction) -> bool:
    """True iff every nonzero-direction derivative is 2-to-1."""
    if f.n != f.m:
        raise ValueError("APN is defined for n = m functions")
    size = 1 << f.n
    t = f.table
    for a in range(1, size):
        counts = [0] * size
        ok = True
        for x in range(size):
            v = t[x ^ a] ^ t[x]
            counts[v] += 1
            if counts[v] > 2:
                ok = False
                break
        if not ok:
            return False
    return True


def quadratic_stability_equals_apn(f: VectorialFunction) -> bool:
    """Theorem-check harness: (no dim-2 degree-drop space) iff APN, for
    quadratic n = m functions.  Both sides computed independently."""
    if f.n != f.m:
        raise ValueError("requires n = m")
    if degree(f) != 2:
        raise ValueError("requires a quadratic function")
    no_drop = full_stability(f)
    return no_drop == is_apn(f)


def drop_fast_duality(f: VectorialFunction) -> bool:
    """Theorem-check harness: the degree-drop hyperplane directions of a
    homogeneous f equal the fast points of its complement."""
    r = degree(f)
    if not isinstance(r, int) or not 1 <= r <= f.n - 1:
        raise ValueError("requires homogeneous degree in [1, n-1]")
    fc = complement(f)  # raises if f is not homogeneous
    return drop_hyperplane_directions(f) == fast_points(fc)


def fast_space_duality(f: VectorialFunction, dirs: Sequence[int]) -> bool:
    """Theorem-check harness for k directions: the solution space of
    dirs-as-normals is a degree-drop space of f iff the k-fold derivative of
    f^c along dirs has degree < deg(f^c) - k."""
    r = degree(f)
    k = len(dirs)
    if not isinstance(r, int) or not 1 <= k <= f.n - r:
        raise ValueError("requires homogeneous degree and 1 <= k <= n - deg(f)")
    if not linalg.is_independent(list(dirs)):
        raise ValueError("directions must be linearly independent")
    fc = complement(f)
    kernel = linalg.kernel_basis(list(dirs), f.n)
    A = affine_subspace(f.n, kernel, 0)
    lhs = is_degree_drop(f, A)
    rhs = degree(higher_derivative(fc, dirs)) < degree(fc) - k
    return lhs == rhs
