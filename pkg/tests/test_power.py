import math
import random
from itertools import combinations

import pytest

from degstab import power
from degstab.boolfn import degree, inverse_function, power_function
from degstab.errors import CapExceededError
from degstab.gf2 import make_ctx
from degstab.scan import scan
from degstab.subspaces import restriction_degree


def no_drop_by_scan(n, d, k):
    ctx = make_ctx(n)
    f = power_function(ctx, d)
    return scan(f, k).extremal_degree == power.profile(n, d).weight


def test_profile():
    p = power.profile(8, 39)
    assert p.digits[:6] == (1, 1, 1, 0, 0, 1)
    assert p.zero_set == {3, 4, 6, 7}
    assert p.weight == 4
    top = power.profile(5, 31)
    assert top.zero_set == frozenset() and top.weight == 5
    with pytest.raises(ValueError):
        power.profile(4, 16)
    with pytest.raises(ValueError):
        power.profile(4, 0)


def test_profile_weight_is_degree():
    for n in (4, 5, 6):
        ctx = make_ctx(n)
        for d in range(1, (1 << n) - 1):
            assert degree(power_function(ctx, d)) == power.profile(n, d).weight


def test_codim1_no_drop():
    assert not power.codim1_no_drop(power.profile(5, 31))
    assert power.codim1_no_drop(power.profile(5, 30))  # inverse
    assert power.codim1_no_drop(power.profile(5, 1))


def test_codim2_criterion_values():
    # zeros {0,6,21} on n = 70: u = gcd(6,15,21) = 3, coprime to 70
    d70 = sum(1 << i for i in range(70) if i not in (0, 6, 21))
    p = power.profile(70, d70)
    assert power.zero_gap_gcd(p) == 3
    assert power.codim2_no_drop(p)
    # adjacent zeros force u = 1
    p2 = power.profile(6, 0b111001)  # zeros at 1, 2
    assert power.zero_gap_gcd(p2) == 1 and power.codim2_no_drop(p2)
    # zeros {0, 2} with n = 4: u = 2 shares a factor with 4
    p3 = power.profile(4, 0b1010)
    assert not power.codim2_no_drop(p3)
    assert not no_drop_by_scan(4, 0b1010, 2)
    with pytest.raises(ValueError):
        power.codim2_no_drop(power.profile(4, 0b1110))  # only one zero


def test_codim_k_sufficient():
    # ones-run exponents: zero positions are a full progression
    for n, u, j in [(5, 2, 2), (7, 3, 2), (5, 1, 3)]:
        d = sum(1 << (i * u) for i in range(j))
        p = power.profile(n, d)
        assert power.codim_k_sufficient(p, n - j)
    p39 = power.profile(8, 39)
    assert not power.codim_k_sufficient(p39, 3)
    assert power.codim_k_sufficient(p39, 1)
    with pytest.raises(ValueError):
        power.codim_k_sufficient(p39, 5)  # k > n - weight


def test_moore_sets_basic():
    ctx = make_ctx(5)
    assert power.is_moore_exponent_set(ctx, range(3)).is_moore
    assert power.is_moore_exponent_set(ctx, [0, 2, 4]).is_moore  # step 2, gcd(2,5)=1
    ctx4 = make_ctx(4)
    v = power.is_moore_exponent_set(ctx4, [0, 2])
    assert not v.is_moore
    assert v.witness is not None
    a, b = v.witness
    assert power._moore_determinant(ctx4, (0, 2), (a, b)) == 0


def test_moore_k2_iff_gcd():
    for n in (4, 5, 6):
        ctx = make_ctx(n)
        for i in range(1, n):
            expected = math.gcd(i, n) == 1
            assert power.is_moore_exponent_set(ctx, [0, i]).is_moore == expected


def test_moore_optimization_equivalence():
    for n in (3, 4, 5):
        ctx = make_ctx(n)
        for k in (1, 2, 3):
            if k > n:
                continue
            for exps in combinations(range(n), k):
                fast = power.is_moore_exponent_set(ctx, exps).is_moore
                slow = power.is_moore_exponent_set(ctx, exps, full_sweep=True).is_moore
                assert fast == slow, (n, exps)


def test_moore_cap():
    with pytest.raises(CapExceededError):
        power.is_moore_exponent_set(make_ctx(13), [0, 1])


def test_codim_k_moore_sufficient_extends_progressions():
    for n in (5, 6, 7):
        ctx = make_ctx(n)
        for d in range(1, (1 << n) - 1):
            p = power.profile(n, d)
            for k in (1, 2):
                if k > n - p.weight:
                    continue
                if power.codim_k_sufficient(p, k):
                    assert power.codim_k_moore_sufficient(ctx, p, k)


def test_moore_k2_coincides_with_gcd_criterion():
    for n in (4, 5, 6):
        ctx = make_ctx(n)
        for d in range(1, (1 << n) - 1):
            p = power.profile(n, d)
            if len(p.zero_set) < 2:
                continue
            assert power.codim_k_moore_sufficient(ctx, p, 2) == power.codim2_no_drop(p)


def test_power_drop_lower_bound():
    ctx = make_ctx(6)
    assert power.power_drop_lower_bound_check(ctx, 62, 2)
    rng = random.Random(51)
    for _ in range(6):
        d = rng.randrange(1, 62)
        for k in (1, 2):
            if k <= power.profile(6, d).weight and power.profile(6, d).weight < 6:
                assert power.power_drop_lower_bound_check(ctx, d, k)


def test_frobenius_invariance_of_predicates():
    for n in (5, 6, 7):
        for d in range(1, (1 << n) - 1):
            p = power.profile(n, d)
            d2 = power.frobenius_double(n, d)
            q = power.profile(n, d2)
            assert p.weight == q.weight
            assert power.codim1_no_drop(p) == power.codim1_no_drop(q)
            if len(p.zero_set) >= 2:
                assert power.codim2_no_drop(p) == power.codim2_no_drop(q)
            for k in range(1, n - p.weight + 1):
                assert power.codim_k_sufficient(p, k) == power.codim_k_sufficient(q, k)


def test_named_families():
    g = power.named_family_report("gold", 5, j=1)
    assert g.d == 3 and g.degree == 2 and g.guaranteed_no_drop_codim == 3
    g2 = power.named_family_report("gold", 4, j=2)
    assert g2.guaranteed_no_drop_codim is None
    w = power.named_family_report("welch", 7)
    assert w.d == (1 << 3) + 3 and w.degree == 3 and w.guaranteed_no_drop_codim == 3
    with pytest.raises(ValueError):
        power.named_family_report("welch", 8)
    k = power.named_family_report("kasami", 8, i=2)
    assert k.d == 13 and k.degree == 3 and k.guaranteed_no_drop_codim == 4
    inv = power.named_family_report("inverse", 6)
    assert inv.d == 62 and inv.degree == 5 and inv.guaranteed_no_drop_codim == 1
    o = power.named_family_report("ones-run", 7, j=3, u=2)
    assert o.d == 1 + 4 + 16 and o.degree == 3 and o.guaranteed_no_drop_codim == 4
    with pytest.raises(ValueError):
        power.named_family_report("ones-run", 6, j=3, u=2)  # gcd(2,6) != 1


def test_named_family_guarantees_hold_by_scan():
    # scan-confirm each family's guaranteed codimension at small n
    cases = [
        power.named_family_report("gold", 5, j=1),
        power.named_family_report("gold", 5, j=2),
        power.named_family_report("welch", 5),
        power.named_family_report("ones-run", 5, j=2, u=2),
        power.named_family_report("inverse", 6),
    ]
    for rep in cases:
        k = rep.guaranteed_no_drop_codim
        if k is None or k < 1:
            continue
        assert no_drop_by_scan(rep.n, rep.d, k), rep


def test_inverse_codim2_classification():
    for n in (4, 6, 8):
        ctx = make_ctx(n)
        rep = power.inverse_codim2_classification(ctx)
        assert rep.special_count == ((1 << n) - 1) // 3
        f = inverse_function(ctx)
        spaces = list(rep.spaces(ctx))
        assert len(spaces) == rep.special_count
        for A in spaces:
            assert A.codim == 2
            assert restriction_degree(f.table, sorted(A.linear.basis), 0) == n - 3
    assert power.inverse_codim2_classification(make_ctx(5)).special_count == 0
    assert power.inverse_codim2_classification(make_ctx(7)).special_count == 0


def test_inverse_codim2_matches_scan():
    for n in (4, 5, 6, 7, 8):
        ctx = make_ctx(n)
        f = inverse_function(ctx)
        hist = scan(f, 2).histogram
        rep = power.inverse_codim2_classification(ctx)
        assert hist.get(n - 3, 0) == rep.special_count


def test_z_values_by_direct_loop():
    # oracle: plain double loop over the indicator equation
    for n in (3, 4, 5, 6):
        ctx = make_ctx(n)
        count = 0
        for d1 in range(1 << n):
            for d2 in range(1 << n):
                if d1 in (0, 1) or d2 in (0, 1, d1, d1 ^ 1):
                    continue
                p = ctx.mul(d1, d2)
                lhs = ctx.mul(p, 1 ^ d1 ^ d2)
                lhs ^= ctx.mul(d1, d1) ^ ctx.mul(d2, d2) ^ ctx.mul(p, p)
                lhs ^= 1 ^ ctx.pow(d1, 4) ^ ctx.pow(d2, 4)
                if lhs == 0:
                    count += 1
        assert power.inverse_codim3_z(ctx) == count


def test_z_table_and_special_counts():
    for n, z in power.Z_TABLE.items():
        assert power.inverse_codim3_z(make_ctx(n)) == z
    for n, c in power.SPECIAL_COUNT_TABLE.items():
        assert power.inverse_codim3_special_count(make_ctx(n)) == c


def test_special_count_matches_scan():
    for n in (4, 5, 6, 7, 8):
        ctx = make_ctx(n)
        f = inverse_function(ctx)
        hist = scan(f, 3).histogram
        assert hist.get(n - 4, 0) == power.inverse_codim3_special_count(ctx)


def test_affine_nondrop_check():
    assert power.affine_nondrop_check(make_ctx(6), 2)
    assert power.affine_nondrop_check(make_ctx(5), 3)
    with pytest.raises(ValueError):
        power.affine_nondrop_check(make_ctx(5), 5)


def test_inverse_codim_k_restriction_degrees():
    # every linear codim-k restriction of the inverse has degree n-k or n-k-1
    for n in (5, 6, 7, 8):
        ctx = make_ctx(n)
        f = inverse_function(ctx)
        for k in (1, 2, 3):
            hist = scan(f, k).histogram
            assert set(hist) <= {n - k, n - k - 1}
