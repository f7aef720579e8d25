import random

import pytest

from degstab import linalg
from degstab.boolfn import (
    AnfForm,
    VectorialFunction,
    affine_transform,
    anf_to_table,
    complement,
    degree,
    fast_points,
    homogeneous_part,
    inverse_function,
    power_function,
)
from degstab.errors import CapExceededError
from degstab.gf2 import make_ctx
from degstab.scan import (
    drop_fast_duality,
    drop_hyperplane_directions,
    fast_space_duality,
    full_stability,
    hyperplane_drop_space,
    is_apn,
    is_degree_drop,
    quadratic_stability_equals_apn,
    scan,
)
from degstab.subspaces import (
    affine_subspace,
    count_affine,
    count_linear,
    enumerate_affine,
    gaussian_binomial,
)


def random_function(rng, n, m):
    return VectorialFunction(n, m, [rng.randrange(1 << m) for _ in range(1 << n)])


def test_small_dimension_always_drops():
    rng = random.Random(31)
    f = random_function(rng, 5, 2)
    r = degree(f)
    assert r >= 2
    for A in enumerate_affine(5, 5 - (r - 1)):  # dimension r-1 < r
        assert is_degree_drop(f, A)


def test_is_degree_drop_rejects_constant():
    const = VectorialFunction(3, 1, [1] * 8)
    with pytest.raises(ValueError):
        is_degree_drop(const, affine_subspace(3, [1, 2], 0))


def test_homogeneous_part_same_drop_sets():
    rng = random.Random(32)
    for _ in range(10):
        f = random_function(rng, 4, 1)
        r = degree(f)
        if not isinstance(r, int) or r < 1:
            continue
        g = homogeneous_part(f, r)
        for codim in (1, 2):
            for A in enumerate_affine(4, codim):
                assert is_degree_drop(f, A) == is_degree_drop(g, A)


def test_scan_histogram_totals():
    rng = random.Random(33)
    f = random_function(rng, 5, 2)
    for codim in (1, 2, 3):
        r_lin = scan(f, codim)
        assert r_lin.total == count_linear(5, codim) == gaussian_binomial(5, codim, 2)
        r_aff = scan(f, codim, scope="affine")
        assert r_aff.total == count_affine(5, codim)


def test_scan_inverse_n8_paper_free_values():
    ctx = make_ctx(8)
    f = inverse_function(ctx)
    assert scan(f, 1).histogram == {7: 255}
    assert scan(f, 2).histogram == {6: 10710, 5: 85}


def test_scan_extremal_list_deterministic_and_truncated():
    ctx = make_ctx(6)
    f = inverse_function(ctx)
    r = scan(f, 2, extremal_limit=5)
    assert r.truncated
    assert len(r.extremal) == 5
    assert r.extremal_degree == 3
    # extremal subspaces actually attain the minimum
    from degstab.subspaces import restriction_degree

    for A in r.extremal:
        assert restriction_degree(f.table, sorted(A.linear.basis), A.offset) == 3


def test_scan_parallel_matches_sequential():
    ctx = make_ctx(7)
    f = inverse_function(ctx)
    seq = scan(f, 2, workers=1)
    par = scan(f, 2, workers=4)
    assert seq.histogram == par.histogram
    assert seq.extremal == par.extremal
    assert seq.extremal_degree == par.extremal_degree


def test_scan_cap():
    ctx = make_ctx(12)
    f = power_function(ctx, 3)
    with pytest.raises(CapExceededError):
        scan(f, 5)


def test_scan_report_serialization():
    ctx = make_ctx(5)
    f = inverse_function(ctx)
    d = scan(f, 2).to_dict()
    assert d["histogram"] == {"3": 155}
    assert d["scope"] == "linear"
    assert all(s.startswith("codim 2;") for s in d["extremal"])


def test_affine_equivalence_preserves_histograms():
    rng = random.Random(34)
    for _ in range(5):
        f = random_function(rng, 4, 2)
        r = degree(f)
        if not isinstance(r, int) or r < 1:
            continue
        M = linalg.random_invertible(4, rng)
        N = linalg.random_invertible(2, rng)
        # input translation permutes affine subspaces, so the affine-scope
        # histogram is exactly invariant (output offset omitted: it can only
        # relabel the constant buckets)
        g = affine_transform(f, M, rng.randrange(16), N, 0)
        # without translations even the linear-scope histogram is invariant
        h = affine_transform(f, M, 0, N, 0)
        for codim in (1, 2):
            assert (
                scan(f, codim, scope="affine").histogram
                == scan(g, codim, scope="affine").histogram
            )
            assert scan(f, codim).histogram == scan(h, codim).histogram


def test_equivalence_preserves_drop_space_counts():
    # adding any lower-degree function leaves the set of degree-drop spaces
    # unchanged, even though lower histogram buckets may shift
    rng = random.Random(41)
    hits = 0
    while hits < 5:
        f = random_function(rng, 4, 2)
        r = degree(f)
        if not isinstance(r, int) or r < 2:
            continue
        hits += 1
        low = homogeneous_part(random_function(rng, 4, 2), r - 1)
        g = VectorialFunction(4, 2, [a ^ b for a, b in zip(f.table, low.table)])
        M = linalg.random_invertible(4, rng)
        N = linalg.random_invertible(2, rng)
        g = affine_transform(g, M, rng.randrange(16), N, rng.randrange(4))
        assert degree(g) == r
        for codim in (1, 2):
            rf = scan(f, codim, scope="affine")
            rg = scan(g, codim, scope="affine")
            assert rf.histogram.get(r, 0) == rg.histogram.get(r, 0)


def test_no_drop_monotone_in_dimension():
    # no degree-drop space of dimension k implies none of dimension k+1
    rng = random.Random(35)
    for _ in range(20):
        f = random_function(rng, 5, 1)
        r = degree(f)
        if not isinstance(r, int) or r < 1 or r >= 5:
            continue
        no_drop = [
            scan(f, 5 - dim, scope="affine").extremal_degree == r
            for dim in range(r, 5)
        ]
        for k in range(len(no_drop) - 1):
            if no_drop[k]:
                assert no_drop[k + 1]


def test_hyperplane_drop_space_closure():
    rng = random.Random(36)
    for n in (4, 5, 6):
        for _ in range(6):
            f = random_function(rng, n, 1)
            if f.is_constant():
                continue
            dirs = drop_hyperplane_directions(f)
            V = hyperplane_drop_space(f)  # raises if not a linear space
            assert len(dirs) + 1 == 1 << V.dim
            for a in dirs:
                assert V.contains(a)
                for b in dirs:
                    assert (a ^ b) == 0 or (a ^ b) in dirs


def test_hyperplane_drop_space_x1_factor():
    # f = x1 * G(x2..xn) with G drop-free: V_f = span{e1}
    G = AnfForm(5, 1, {0b00110: 1, 0b11000: 1})  # degree-2 in x2..x5
    coeffs = {mask | 1: 1 for mask in G.coeffs}
    f = anf_to_table(AnfForm(5, 1, coeffs))
    V = hyperplane_drop_space(f)
    assert V.basis == (1,)


def test_full_stability_examples():
    # injective linear function
    ctx = make_ctx(4)
    f = power_function(ctx, 1)
    assert full_stability(f)
    # x^(2^j - 1) for n <= 6
    for n in (4, 5, 6):
        ctx = make_ctx(n)
        for j in range(2, n + 1):
            assert full_stability(power_function(ctx, (1 << j) - 1))


def test_boolean_functions_never_fully_stable_below_top_degree():
    rng = random.Random(37)
    hits = 0
    while hits < 15:
        f = random_function(rng, 5, 1)
        r = degree(f)
        if not isinstance(r, int) or r < 1 or r >= 5:
            continue
        hits += 1
        assert not full_stability(f)


def test_is_apn():
    assert is_apn(power_function(make_ctx(5), 3))
    assert is_apn(power_function(make_ctx(4), 3))
    assert not is_apn(power_function(make_ctx(4), 5))  # gold j=2, gcd(2,4)=2
    assert not is_apn(power_function(make_ctx(4), 1))  # affine
    with pytest.raises(ValueError):
        is_apn(VectorialFunction(3, 2, [0] * 8))


def test_quadratic_stability_equals_apn():
    assert quadratic_stability_equals_apn(power_function(make_ctx(5), 3))
    assert quadratic_stability_equals_apn(power_function(make_ctx(4), 5))
    rng = random.Random(38)
    hits = 0
    while hits < 5:
        masks = [m for m in range(16) if bin(m).count("1") == 2]
        coeffs = {m: rng.randrange(1, 16) for m in masks if rng.random() < 0.5}
        f = anf_to_table(AnfForm(4, 4, coeffs))
        if degree(f) != 2:
            continue
        hits += 1
        assert quadratic_stability_equals_apn(f)


def test_drop_fast_duality():
    f = anf_to_table(AnfForm(3, 1, {0b011: 1}))  # x1 x2
    assert drop_hyperplane_directions(f) == fast_points(complement(f))
    assert drop_fast_duality(f)
    rng = random.Random(39)
    hits = 0
    while hits < 20:
        n = rng.randrange(3, 6)
        r = rng.randrange(1, n)
        masks = [m for m in range(1 << n) if bin(m).count("1") == r]
        coeffs = {m: 1 for m in masks if rng.random() < 0.5}
        if not coeffs:
            continue
        f = anf_to_table(AnfForm(n, 1, coeffs))
        hits += 1
        assert drop_fast_duality(f)


def test_fast_space_duality():
    f = anf_to_table(AnfForm(5, 1, {0b00111: 1}))  # x1 x2 x3
    assert fast_space_duality(f, [0b01000, 0b10000])  # e4, e5
    rng = random.Random(40)
    hits = 0
    while hits < 15:
        n = 5
        r = rng.randrange(1, 4)
        masks = [m for m in range(1 << n) if bin(m).count("1") == r]
        coeffs = {m: 1 for m in masks if rng.random() < 0.5}
        if not coeffs:
            continue
        f = anf_to_table(AnfForm(n, 1, coeffs))
        dirs = [rng.randrange(1, 32), rng.randrange(1, 32)]
        if linalg.rank(dirs) != 2:
            continue
        hits += 1
        assert fast_space_duality(f, dirs)


def test_representation_invariance_of_histograms():
    # same power function under two irreducible moduli: identical histograms
    from degstab.gf2 import is_irreducible

    for n in (5, 6, 8):
        mods = [p for p in range(1 << n, 1 << (n + 1)) if is_irreducible(p)][:2]
        for d in (3, (1 << n) - 2):
            hists = []
            for mod in mods:
                f = power_function(make_ctx(n, mod), d)
                hists.append(scan(f, 2).histogram)
            assert hists[0] == hists[1]
